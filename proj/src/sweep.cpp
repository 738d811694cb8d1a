#include "strongcommon/sweep.hpp"

#include "strongcommon/error.hpp"

namespace strongcommon {

const std::vector<std::string>& scan_columns() {
  static const std::vector<std::string> columns = {"canonical", "n",         "m",             "girth",
                                                   "c3",        "applicable", "witness_p",     "witness_value",
                                                   "lemmas_pass", "error"};
  return columns;
}

ScanRow scan_graph(const Graph& graph, const CertifyOptions& options) {
  ScanRow row;
  row.n = graph.n();
  row.m = graph.m();
  row.girth = girth(graph);
  auto cert = certify_not_strongly_common(graph, options);
  row.canonical = cert.canon;
  row.c3 = delta(graph, options).c3;  // [3]Delta_H itself, not the deficit sum
  row.applicable = cert.applicable;
  row.witness_p = cert.witness_p;
  row.witness_value = cert.witness_value;
  row.lemmas_pass = verify_lemma_suite(graph, options).all_pass();
  return row;
}

ScanRow scan_graph6_line(const std::string& line, const ScanOptions& options) {
  try {
    return scan_graph(parse_graph6(line, options.max_vertices), options.certify);
  } catch (const std::exception& e) {
    ScanRow row;
    row.error = e.what();
    return row;
  }
}

std::vector<ScanRow> scan_lines(const std::vector<std::string>& lines, const ScanOptions& options) {
  std::vector<std::string> graphs;
  for (const auto& line : lines) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    graphs.push_back(line.substr(first, last - first + 1));
  }
  UpDensityCache shared_cache(options.certify.assignment_budget);
  ScanOptions local = options;
  if (!local.certify.cache) local.certify.cache = &shared_cache;
  return parallel_map(graphs.size(), options.jobs,
                      [&](std::size_t i) { return scan_graph6_line(graphs[i], local); });
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string optional_rational(const std::optional<Rational>& value) { return value ? to_string(*value) : ""; }

}  // namespace

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  const auto& columns = scan_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      out << ",,,,,,,,," << csv_field(row.error) << '\n';
      continue;
    }
    out << csv_field(row.canonical) << ',' << row.n << ',' << row.m << ','
        << (row.girth ? std::to_string(*row.girth) : "") << ',' << optional_rational(row.c3) << ','
        << (row.applicable ? "yes" : "no") << ',' << optional_rational(row.witness_p) << ','
        << optional_rational(row.witness_value) << ','
        << (row.lemmas_pass ? (*row.lemmas_pass ? "yes" : "no") : "") << ",\n";
  }
}

Json scan_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r;
    if (!row.error.empty()) {
      for (const auto& column : scan_columns()) r[column] = nullptr;
      r["error"] = row.error;
      out.push_back(std::move(r));
      continue;
    }
    r["canonical"] = row.canonical;
    r["n"] = row.n;
    r["m"] = row.m;
    r["girth"] = row.girth ? Json(*row.girth) : Json(nullptr);
    r["c3"] = row.c3 ? rational_json(*row.c3) : Json(nullptr);
    r["applicable"] = row.applicable;
    r["witness_p"] = row.witness_p ? rational_json(*row.witness_p) : Json(nullptr);
    r["witness_value"] = row.witness_value ? rational_json(*row.witness_value) : Json(nullptr);
    r["lemmas_pass"] = row.lemmas_pass ? Json(*row.lemmas_pass) : Json(nullptr);
    r["error"] = nullptr;
    out.push_back(std::move(r));
  }
  return out;
}

LemmaSweep run_lemma_sweep(int max_n, int jobs, const CertifyOptions& options) {
  if (max_n < 1 || max_n > 10) throw PreconditionError("max-n must be between 1 and 10");
  const auto graphs = enumerate_graphs(max_n);
  UpDensityCache shared_cache(options.assignment_budget);
  CertifyOptions local = options;
  if (!local.cache) local.cache = &shared_cache;
  const auto reports =
      parallel_map(graphs.size(), jobs, [&](std::size_t i) { return verify_lemma_suite(graphs[i], local); });

  LemmaSweep sweep;
  sweep.max_n = max_n;
  sweep.graphs = graphs.size();
  for (const auto& report : reports) {
    sweep.pairs += static_cast<std::size_t>(report.pairs);
    const auto checks = report.checks();
    if (sweep.totals.empty()) {
      for (const auto& [name, check] : checks) sweep.totals.emplace_back(std::string(name), LemmaCheck{});
    }
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const LemmaCheck& check = *checks[k].second;
      LemmaCheck& total = sweep.totals[k].second;
      total.instances += check.instances;
      total.vacuous += check.vacuous;
      if (check.status == CheckStatus::kFail) {
        if (total.status != CheckStatus::kFail) total.detail = report.canon + ": " + check.detail;
        total.status = CheckStatus::kFail;
        sweep.failures.push_back({report.canon, std::string(checks[k].first), check.detail});
      } else if (check.status == CheckStatus::kPass && total.status == CheckStatus::kVacuous) {
        total.status = CheckStatus::kPass;
      }
    }
  }
  return sweep;
}

}  // namespace strongcommon
