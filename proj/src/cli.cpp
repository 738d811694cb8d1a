#include "strongcommon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "strongcommon/certify.hpp"
#include "strongcommon/document.hpp"
#include "strongcommon/error.hpp"
#include "strongcommon/sweep.hpp"

namespace strongcommon {
namespace {

struct GraphFlags {
  std::string g6;
  std::string edges;
  std::string tree;
  std::string input;
};

struct CommonFlags {
  std::string output;
  std::string format = "json";
  int jobs = 1;
  int max_vertices = kDefaultVertexCap;
  int max_subset_bits = kDefaultSubsetBits;
  int max_halvings = 64;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& flags, bool input_is_list) {
  auto* g6 = cmd->add_option("--g6", flags.g6, "Graph in graph6 format");
  auto* edges = cmd->add_option("--edges", flags.edges, "Edge list such as \"0 1,1 2,0 2\"");
  auto* tree = cmd->add_option("--tree", flags.tree, "Triangle-tree build steps such as \"v0,e1\"");
  auto* input = cmd->add_option("--input", flags.input,
                                input_is_list ? "File of graph6 lines ('-' for stdin)"
                                              : "File whose first non-blank line is a graph6 string");
  g6->excludes(edges, tree, input);
  edges->excludes(tree, input);
  tree->excludes(input);
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_format, bool with_jobs) {
  cmd->add_option("--output", flags.output, "Write the result to this file instead of stdout");
  if (with_format) {
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  }
  if (with_jobs) cmd->add_option("--jobs", flags.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  cmd->add_option("--max-vertices", flags.max_vertices, "Largest accepted graph")
      ->check(CLI::Range(1, kMaxVertices));
  cmd->add_option("--max-subset-bits", flags.max_subset_bits, "Largest edge count for subgraph enumeration")
      ->check(CLI::Range(1, 62));
  cmd->add_option("--max-halvings", flags.max_halvings, "Witness search depth")->check(CLI::PositiveNumber);
}

CertifyOptions certify_options(const CommonFlags& flags) {
  CertifyOptions options;
  options.max_subset_bits = flags.max_subset_bits;
  options.max_halvings = flags.max_halvings;
  return options;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw ParseError("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(*in, line);) lines.push_back(line);
  return lines;
}

std::string read_text(const std::string& path) {
  std::ostringstream text;
  for (const auto& line : read_lines(path)) text << line << '\n';
  return text.str();
}

std::string trimmed(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Graph read_graph(const GraphFlags& flags, int max_vertices) {
  if (!flags.g6.empty()) return parse_graph6(flags.g6, max_vertices);
  if (!flags.edges.empty()) {
    std::string text = flags.edges;
    std::replace(text.begin(), text.end(), ',', '\n');
    return parse_edge_list(text, max_vertices);
  }
  if (!flags.tree.empty()) {
    Graph graph = gen_triangle_tree(parse_triangle_tree(flags.tree));
    if (graph.n() > max_vertices) throw ParseError("triangle tree exceeds the vertex cap");
    return graph;
  }
  if (!flags.input.empty()) {
    for (const auto& line : read_lines(flags.input)) {
      auto g6 = trimmed(line);
      if (!g6.empty()) return parse_graph6(g6, max_vertices);
    }
    throw ParseError(flags.input + " contains no graph");
  }
  throw ParseError("no graph given; use --g6, --edges, --tree or --input");
}

// Graphs for commands that accept either one graph or a file of many.
std::vector<Graph> read_graphs(const GraphFlags& flags, int max_vertices) {
  if (flags.input.empty()) return {read_graph(flags, max_vertices)};
  std::vector<Graph> graphs;
  for (const auto& line : read_lines(flags.input)) {
    auto g6 = trimmed(line);
    if (!g6.empty()) graphs.push_back(parse_graph6(g6, max_vertices));
  }
  return graphs;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream stream(text);
  for (std::string item; std::getline(stream, item, ',');) values.push_back(parse_rational(trimmed(item)));
  return values;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  Output target(path, out);
  *target << doc.dump(2) << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

Json graph_json(const Graph& graph) {
  return {{"graph6", to_graph6(graph)}, {"n", graph.n()}, {"m", graph.m()}, {"canonical", canonical_form(graph)}};
}

int cmd_certify(const GraphFlags& graph_flags, const CommonFlags& flags, bool timings, std::ostream& out) {
  const Graph graph = read_graph(graph_flags, flags.max_vertices);
  const CertifyOptions options = certify_options(flags);
  if (flags.format == "csv") {
    ScanRow row = scan_graph(graph, options);
    Output target(flags.output, out);
    write_scan_csv(*target, {row});
    return row.applicable ? kExitCertified : kExitNotApplicable;
  }
  auto start = std::chrono::steady_clock::now();
  const auto cert = certify_not_strongly_common(graph, options);
  const double certify_ms = elapsed_ms(start);
  start = std::chrono::steady_clock::now();
  const auto lemmas = verify_lemma_suite(graph, options);
  const double lemma_ms = elapsed_ms(start);
  Json timing = Json::object();
  if (timings) timing = {{"certify", certify_ms}, {"lemmas", lemma_ms}};
  emit(certificate_document(cert, &lemmas, timing), flags.output, out);
  return cert.applicable ? kExitCertified : kExitNotApplicable;
}

int cmd_verify(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  Json doc;
  try {
    doc = Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const auto check = verify_certificate_document(doc);
  Output target(flags.output, out);
  *target << (check.valid ? (check.certified ? "certified: " : "consistent, ") : "invalid: ") << check.detail
          << '\n';
  if (!check.valid) return kExitInputError;
  return check.certified ? kExitCertified : kExitNotApplicable;
}

int cmd_scan(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  ScanOptions options;
  options.certify = certify_options(flags);
  options.max_vertices = flags.max_vertices;
  options.jobs = flags.jobs;
  const auto rows = scan_lines(read_lines(path), options);
  Output target(flags.output, out);
  if (flags.format == "csv") {
    write_scan_csv(*target, rows);
  } else {
    *target << scan_json(rows).dump(2) << '\n';
  }
  const bool failed = std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.error.empty(); });
  return failed ? kExitPartialFailure : 0;
}

int cmd_lemmas(int max_n, const CommonFlags& flags, std::ostream& out) {
  const auto sweep = run_lemma_sweep(max_n, flags.jobs, certify_options(flags));
  Output target(flags.output, out);
  if (flags.format == "json") {
    Json doc;
    doc["max_n"] = sweep.max_n;
    doc["graphs"] = sweep.graphs;
    doc["pairs"] = sweep.pairs;
    doc["all_pass"] = sweep.all_pass();
    Json checks;
    for (const auto& [name, total] : sweep.totals) {
      checks[name] = {{"status", to_string(total.status)},
                      {"instances", total.instances},
                      {"vacuous", total.vacuous}};
    }
    doc["checks"] = std::move(checks);
    Json failures = Json::array();
    for (const auto& f : sweep.failures) failures.push_back({{"canon", f.canon}, {"check", f.check}, {"detail", f.detail}});
    doc["failures"] = std::move(failures);
    *target << doc.dump(2) << '\n';
  } else {
    if (sweep.all_pass()) {
      *target << sweep.graphs << " graphs, all lemma checks passed\n";
    } else {
      *target << sweep.graphs << " graphs, " << sweep.failures.size() << " lemma check failures\n";
    }
    *target << "pairs checked: " << sweep.pairs << '\n';
    for (const auto& [name, total] : sweep.totals) {
      *target << "  " << name << ": " << to_string(total.status) << " (" << total.instances << " instances, "
              << total.vacuous << " vacuous)\n";
    }
    for (const auto& f : sweep.failures) *target << "FAIL " << f.canon << ' ' << f.check << ": " << f.detail << '\n';
  }
  return sweep.all_pass() ? 0 : kExitPartialFailure;
}

int cmd_density(const GraphFlags& graph_flags, const CommonFlags& flags, const std::string& engine,
                const std::string& at, std::ostream& out) {
  const Graph graph = read_graph(graph_flags, flags.max_vertices);
  const Polynomial density =
      engine == "recurrence" ? hom_density_recurrence(graph) : hom_density_up(graph);
  Json doc;
  doc["graph"] = graph_json(graph);
  doc["density_coeffs"] = coefficients_json(density);
  doc["density"] = to_string(density);
  doc["delta_coeffs"] = coefficients_json(delta_from_density(density, graph.m()));
  if (!at.empty()) {
    const Rational p = parse_rational(at);
    doc["p"] = rational_json(p);
    doc["density_at_p"] = rational_json(eval(density, p));
  }
  emit(doc, flags.output, out);
  return 0;
}

StepKernel kernel_from_flags(const std::string& measures, const std::string& entries, const std::string& lifted) {
  if (!lifted.empty()) return lifted_up_kernel(parse_rational(lifted));
  const auto blocks = parse_rational_list(measures);
  const auto upper = parse_rational_list(entries);
  const std::size_t k = blocks.size();
  if (upper.size() != k * (k + 1) / 2) {
    throw ParseError("--entries needs " + std::to_string(k * (k + 1) / 2) +
                     " values (the upper triangle, row by row)");
  }
  std::vector<std::vector<Rational>> values(k, std::vector<Rational>(k));
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) values[i][j] = values[j][i] = upper[next++];
  }
  return constant_kernel(blocks, values);
}

int cmd_inequality(const GraphFlags& graph_flags, const CommonFlags& flags, const StepKernel& kernel,
                   std::ostream& out) {
  const Graph graph = read_graph(graph_flags, flags.max_vertices);
  const Rational difference = inequality_check(graph, kernel);
  const auto expansion = expansion_identity(graph, kernel, certify_options(flags));
  Json doc;
  doc["graph"] = graph_json(graph);
  Json measures = Json::array();
  for (const auto& m : kernel.measures()) measures.push_back(rational_json(m));
  Json entries = Json::array();
  for (int i = 0; i < kernel.blocks(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < kernel.blocks(); ++j) row.push_back(rational_json(kernel.constant_entry(i, j)));
    entries.push_back(std::move(row));
  }
  doc["kernel"] = {{"measures", std::move(measures)}, {"entries", std::move(entries)}};
  doc["density_sum"] = rational_json(expansion.density_lhs);
  doc["edge_density_sum"] = rational_json(expansion.edge_lhs);
  doc["difference"] = rational_json(difference);
  doc["violates"] = difference < 0;
  doc["expansion_holds"] = expansion.holds();
  emit(doc, flags.output, out);
  return 0;
}

int cmd_local(const GraphFlags& graph_flags, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const Graph graph = read_graph(graph_flags, flags.max_vertices);
  LocalWitness witness;
  try {
    witness = local_witness(graph, certify_options(flags));
  } catch (const PreconditionError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kExitNotApplicable;
  }
  Json doc;
  doc["graph"] = graph_json(graph);
  doc["p"] = rational_json(witness.p);
  doc["epsilon_coeffs"] = coefficients_json(witness.epsilon_polynomial);
  doc["epsilon0"] = rational_json(witness.epsilon0);
  Json samples = Json::array();
  for (std::size_t i = 0; i < witness.values.size(); ++i) {
    samples.push_back({{"epsilon", rational_json(witness.sampled_epsilons[i])},
                       {"value", rational_json(witness.values[i])}});
  }
  doc["samples"] = std::move(samples);
  emit(doc, flags.output, out);
  return 0;
}

int cmd_explore_girth(const GraphFlags& graph_flags, const CommonFlags& flags, std::ostream& out) {
  const auto graphs = read_graphs(graph_flags, flags.max_vertices);
  const CertifyOptions options = certify_options(flags);
  auto reports = parallel_map(graphs.size(), flags.jobs, [&](std::size_t i) {
    const auto report = girth_explorer(graphs[i], options);
    Json row;
    row["graph"] = graph_json(graphs[i]);
    row["girth"] = report.girth ? Json(*report.girth) : Json(nullptr);
    row["deficit_coeffs"] = coefficients_json(report.deficit);
    row["lowest_index"] = report.lowest_index ? Json(*report.lowest_index) : Json(nullptr);
    row["lowest_sign"] = report.lowest_sign;
    return row;
  });
  Json doc = Json::array();
  for (auto& row : reports) doc.push_back(std::move(row));
  emit(graph_flags.input.empty() ? doc.front() : doc, flags.output, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates that graphs properly containing a triangle are not strongly common"};
  app.name("strongcommon");
  app.require_subcommand(1);

  GraphFlags graph_flags;
  CommonFlags flags;

  bool timings = false;
  auto* certify = app.add_subcommand("certify", "Emit a deficit certificate for one graph");
  add_graph_flags(certify, graph_flags, false);
  add_common_flags(certify, flags, true, false);
  certify->add_flag("--timings", timings, "Record wall-clock timings in the document");

  std::string document_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate document without recomputing densities");
  verify->add_option("--input", document_path, "Certificate JSON ('-' for stdin)")->required();
  verify->add_option("--output", flags.output, "Write the verdict to this file");

  std::string scan_path;
  auto* scan = app.add_subcommand("scan", "Certify every graph6 line of a file");
  scan->add_option("--input", scan_path, "File of graph6 lines ('-' for stdin)")->required();
  add_common_flags(scan, flags, true, true);

  int max_n = 7;
  auto* lemmas = app.add_subcommand("lemmas", "Check the structural density facts on all small graphs");
  lemmas->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::Range(1, 10));
  add_common_flags(lemmas, flags, false, true);
  lemmas->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string engine = "direct";
  std::string at;
  auto* density = app.add_subcommand("density", "Print the coefficients of t_H(U_p)");
  add_graph_flags(density, graph_flags, false);
  add_common_flags(density, flags, false, false);
  density->add_option("--engine", engine, "Density engine")->check(CLI::IsMember({"direct", "recurrence"}));
  density->add_option("--p", at, "Also evaluate at this rational p");

  std::string measures = "1/2,1/2";
  std::string entries;
  std::string lifted;
  auto* inequality = app.add_subcommand("inequality", "Evaluate the colouring inequality for a step kernel W");
  add_graph_flags(inequality, graph_flags, false);
  add_common_flags(inequality, flags, false, false);
  inequality->add_option("--measures", measures, "Block measures, comma separated");
  auto* entries_opt =
      inequality->add_option("--entries", entries, "Upper triangle of W, row by row, comma separated");
  auto* lifted_opt = inequality->add_option("--lifted-p", lifted, "Use W = (1 + U_p)/2 at this p");
  entries_opt->excludes(lifted_opt);

  auto* local = app.add_subcommand("local", "Witness against local strong commonness");
  add_graph_flags(local, graph_flags, false);
  add_common_flags(local, flags, false, false);

  auto* explore = app.add_subcommand("explore-girth", "Girth and lowest-order deficit term");
  add_graph_flags(explore, graph_flags, true);
  add_common_flags(explore, flags, false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*certify) return cmd_certify(graph_flags, flags, timings, out);
    if (*verify) return cmd_verify(document_path, flags, out);
    if (*scan) {
      if (scan->count("--format") == 0) flags.format = "csv";
      return cmd_scan(scan_path, flags, out);
    }
    if (*lemmas) {
      if (lemmas->count("--format") == 0) flags.format = "text";
      return cmd_lemmas(max_n, flags, out);
    }
    if (*density) return cmd_density(graph_flags, flags, engine, at, out);
    if (*inequality) {
      if (entries.empty() && lifted.empty()) throw ParseError("give --entries or --lifted-p");
      return cmd_inequality(graph_flags, flags, kernel_from_flags(measures, entries, lifted), out);
    }
    if (*local) return cmd_local(graph_flags, flags, out, err);
    if (*explore) return cmd_explore_girth(graph_flags, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace strongcommon
