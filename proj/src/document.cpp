#include "strongcommon/document.hpp"

#include "strongcommon/error.hpp"

namespace strongcommon {

Json rational_json(const Rational& value) { return to_string(value); }

Json coefficients_json(const Polynomial& poly) {
  Json out = Json::array();
  for (const auto& c : poly.coeffs()) out.push_back(rational_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& coeffs) {
  if (!coeffs.is_array()) throw ParseError("coefficients must be an array of \"num/den\" strings");
  std::vector<Rational> values;
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw ParseError("coefficients must be an array of \"num/den\" strings");
    values.push_back(parse_rational(c.get<std::string>()));
  }
  return Polynomial(std::move(values));
}

Json certificate_document(const DeficitCertificate& cert, const LemmaReport* lemmas, const Json& timings) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["graph"] = {
      {"graph6", to_graph6(cert.graph)},
      {"n", cert.graph.n()},
      {"m", cert.graph.m()},
      {"canonical", cert.canon},
  };
  doc["applicable"] = cert.applicable;
  doc["reason"] = cert.reason;
  doc["deficit_coeffs"] = coefficients_json(cert.deficit);
  doc["c3"] = rational_json(cert.c3);
  doc["witness_p"] = cert.witness_p ? rational_json(*cert.witness_p) : Json(nullptr);
  doc["witness_value"] = cert.witness_value ? rational_json(*cert.witness_value) : Json(nullptr);
  Json classes = Json::array();
  for (const auto& c : cert.classes) {
    classes.push_back({
        {"canon", c.cls.canon},
        {"edge_count", c.cls.edge_count},
        {"multiplicity", c.cls.multiplicity},
        {"delta_coeffs", coefficients_json(c.delta)},
    });
  }
  doc["classes"] = std::move(classes);
  Json report = Json::object();
  if (lemmas) {
    for (const auto& [name, check] : lemmas->checks()) report[std::string(name)] = to_string(check->status);
  }
  doc["lemma_report"] = std::move(report);
  doc["timings_ms"] = timings;
  return doc;
}

namespace {

DocumentCheck invalid(std::string detail) { return {false, false, std::move(detail)}; }

}  // namespace

DocumentCheck verify_certificate_document(const Json& document) {
  try {
    if (!document.is_object()) return invalid("document is not a JSON object");
    const auto version = document.at("schema_version").get<std::string>();
    if (version != "1" && version.rfind("1.", 0) != 0) return invalid("unsupported schema_version " + version);

    const long m = document.at("graph").at("m").get<long>();
    if (m < 0 || m > 63) return invalid("edge count out of range");
    std::uint64_t total = 0;
    for (const auto& c : document.at("classes")) total += c.at("multiplicity").get<std::uint64_t>();
    const std::uint64_t expected = m == 0 ? 0 : (std::uint64_t{1} << (m - 1)) - 1;
    if (total != expected) {
      return invalid("class multiplicities sum to " + std::to_string(total) + ", expected " +
                     std::to_string(expected));
    }

    const Polynomial deficit = polynomial_from_json(document.at("deficit_coeffs"));
    const bool applicable = document.at("applicable").get<bool>();
    const auto& wp = document.at("witness_p");
    const auto& wv = document.at("witness_value");
    if (!applicable) {
      if (!wp.is_null() || !wv.is_null()) return invalid("inapplicable certificate carries a witness");
      return {true, false, "not applicable: " + document.value("reason", std::string())};
    }
    if (!wp.is_string() || !wv.is_string()) return invalid("applicable certificate lacks a witness");
    const Rational p = parse_rational(wp.get<std::string>());
    const Rational value = parse_rational(wv.get<std::string>());
    if (p <= 0 || p > 1) return invalid("witness_p " + to_string(p) + " is outside (0, 1]");
    const Rational actual = eval(deficit, p);
    if (actual != value) {
      return invalid("deficit at witness_p is " + to_string(actual) + ", document says " + to_string(value));
    }
    if (value >= 0) return invalid("witness_value " + to_string(value) + " is not negative");
    return {true, true, "deficit(" + to_string(p) + ") = " + to_string(value) + " < 0"};
  } catch (const Json::exception& e) {
    return invalid(std::string("malformed document: ") + e.what());
  } catch (const ParseError& e) {
    return invalid(std::string("malformed document: ") + e.what());
  }
}

}  // namespace strongcommon
