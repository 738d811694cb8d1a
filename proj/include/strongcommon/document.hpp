#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strongcommon/certify.hpp"

namespace strongcommon {

// Insertion-ordered JSON so that identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json rational_json(const Rational& value);
Json coefficients_json(const Polynomial& poly);
Polynomial polynomial_from_json(const Json& coeffs);

// Fields: schema_version, graph {graph6, n, m, canonical}, applicable, reason,
// deficit_coeffs, c3, witness_p, witness_value (null when not applicable),
// classes [{canon, edge_count, multiplicity, delta_coeffs}], lemma_report
// (check name -> status; empty when not computed) and timings_ms.
Json certificate_document(const DeficitCertificate& cert, const LemmaReport* lemmas = nullptr,
                          const Json& timings = Json::object());

struct DocumentCheck {
  bool valid = false;       // the document is internally consistent
  bool certified = false;   // valid, applicable and witness_value < 0
  std::string detail;
};

// Re-verifies a certificate document using only its own contents: one
// evaluation of deficit_coeffs at witness_p plus the multiplicity count.
// Unknown fields are ignored; a schema major version other than 1 is invalid.
DocumentCheck verify_certificate_document(const Json& document);

}  // namespace strongcommon
