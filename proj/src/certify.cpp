#include "strongcommon/certify.hpp"

#include <algorithm>

namespace strongcommon {

namespace {

Polynomial edge_power(int edges) { return pow(p_minus_one(), static_cast<unsigned>(edges)); }

UpDensityCache& cache_for(const CertifyOptions& options, std::optional<UpDensityCache>& local) {
  if (options.cache != nullptr) return *options.cache;
  local.emplace(options.assignment_budget);
  return *local;
}

std::string pair_text(int a, int b) { return "pair (" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

Polynomial delta_from_density(const Polynomial& density, int edges) { return density - edge_power(edges); }

DeltaReport delta(const Graph& graph, const CertifyOptions& options) {
  DeltaReport report;
  report.canon = canonical_form(graph);
  report.delta = delta_from_density(hom_density_up(graph, options.assignment_budget), graph.m());
  report.c3 = report.delta.coeff(3);
  report.p3_divisible = divide_by_p_power(report.delta, 3).has_value();
  report.p4_divisible = divide_by_p_power(report.delta, 4).has_value();
  report.has_triangle = has_triangle(graph);
  return report;
}

Deficit deficit(const Graph& graph, const CertifyOptions& options) {
  std::optional<UpDensityCache> local;
  UpDensityCache& cache = cache_for(options, local);
  Deficit out;
  for (auto& cls : even_spanning_subgraphs(graph, options.max_subset_bits)) {
    Polynomial d = delta_from_density(cache.density(cls.representative, cls.canon), cls.edge_count);
    out.total += d * Rational(Integer(static_cast<unsigned long>(cls.multiplicity)));
    out.classes.push_back({std::move(cls), std::move(d)});
  }
  return out;
}

Polynomial deficit_raw(const Graph& graph, const CertifyOptions& options) {
  Polynomial total;
  for (const auto& sub : even_spanning_subgraphs_raw(graph, options.max_subset_bits)) {
    total += delta_from_density(hom_density_up(sub, options.assignment_budget), sub.m());
  }
  return total;
}

Rational find_negative_witness(const Polynomial& poly, int max_halvings) {
  if (!divide_by_p_power(poly, 3)) {
    throw PreconditionError("negative witness: p^3 does not divide " + to_string(poly));
  }
  if (poly.coeff(3) >= 0) {
    throw PreconditionError("negative witness: coefficient of p^3 in " + to_string(poly) + " is not negative");
  }
  Rational p(1, 2);
  for (int i = 0; i < max_halvings; ++i, p /= 2) {
    if (eval(poly, p) < 0) return p;
  }
  throw Error("negative witness: no p >= 2^-" + std::to_string(max_halvings) + " found for " + to_string(poly));
}

DeficitCertificate certify_not_strongly_common(const Graph& graph, const CertifyOptions& options) {
  DeficitCertificate cert;
  cert.graph = graph;
  cert.canon = canonical_form(graph);
  Deficit d = deficit(graph, options);
  cert.classes = std::move(d.classes);
  cert.deficit = std::move(d.total);
  cert.c3 = cert.deficit.coeff(3);
  if (!has_triangle(graph)) {
    cert.reason = "no triangle";
    return cert;
  }
  if (graph.m() < 4) {
    cert.reason = "does not properly contain a triangle (e=" + std::to_string(graph.m()) + ")";
    return cert;
  }
  if (cert.c3 >= 0 || !divide_by_p_power(cert.deficit, 3)) {
    throw Error("certificate: deficit " + to_string(cert.deficit) + " of " + cert.canon +
                " lacks a negative leading p^3 term");
  }
  cert.applicable = true;
  cert.reason = "properly contains a triangle";
  cert.witness_p = find_negative_witness(cert.deficit, options.max_halvings);
  cert.witness_value = eval(cert.deficit, *cert.witness_p);
  return cert;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kVacuous:
      return "vacuous-pass";
    case CheckStatus::kFail:
      return "fail";
  }
  return "fail";
}

void LemmaCheck::fail(std::string what) {
  ++instances;
  if (status != CheckStatus::kFail) detail = std::move(what);
  status = CheckStatus::kFail;
}

std::vector<std::pair<std::string_view, const LemmaCheck*>> LemmaReport::checks() const {
  return {
      {"pair_coefficients", &pair_coefficients},   {"quadratic_tie", &quadratic_tie},
      {"quadratic_transfer", &quadratic_transfer}, {"edge_addition", &edge_addition},
      {"quadratic_sign", &quadratic_sign},         {"cubic_divisibility", &cubic_divisibility},
      {"triangle_free_quartic", &triangle_free_quartic}, {"triangle_cubic_sign", &triangle_cubic_sign},
  };
}

bool LemmaReport::all_pass() const {
  for (const auto& [name, check] : checks()) {
    if (!check->ok()) return false;
  }
  return true;
}

LemmaReport verify_lemma_suite(const Graph& graph, const CertifyOptions& options) {
  const auto budget = options.assignment_budget;
  const int e = graph.m();
  const Polynomial p = Polynomial::variable();
  const Polynomial density = hom_density_up(graph, budget);
  const Polynomial base_power = edge_power(e);
  const Polynomial delta_h = density - base_power;
  const int parity = e % 2 == 0 ? 1 : -1;
  const bool triangle = has_triangle(graph);

  LemmaReport report;
  report.canon = canonical_form(graph);

  if (divide_by_p_power(delta_h, 3)) {
    report.cubic_divisibility.pass();
  } else {
    report.cubic_divisibility.fail("Delta = " + to_string(delta_h));
  }
  if (triangle) {
    report.triangle_free_quartic.skip();
    if (sign(delta_h.coeff(3)) == -parity) {
      report.triangle_cubic_sign.pass();
    } else {
      report.triangle_cubic_sign.fail("[3]Delta = " + to_string(delta_h.coeff(3)) + " with e=" + std::to_string(e));
    }
  } else {
    report.triangle_cubic_sign.skip();
    if (divide_by_p_power(delta_h, 4)) {
      report.triangle_free_quartic.pass();
    } else {
      report.triangle_free_quartic.fail("Delta = " + to_string(delta_h));
    }
  }

  const bool delta_p2 = divide_by_p_power(delta_h, 2).has_value();
  for (int a = 0; a < graph.n(); ++a) {
    for (int b = a + 1; b < graph.n(); ++b) {
      if (graph.adjacent(a, b)) continue;
      ++report.pairs;
      const auto pair = restricted_densities(graph, a, b, budget);
      const Polynomial& f = pair.f;
      const Polynomial& g = pair.g;

      bool signs = true;
      for (int j = 0; j <= e; ++j) {
        if (f.coeff(static_cast<std::size_t>(j)) * g.coeff(static_cast<std::size_t>(j)) < 0) signs = false;
      }
      if (signs && f.coeff(0) == g.coeff(0) && f.coeff(1) == g.coeff(1) && abs(f.coeff(2)) >= abs(g.coeff(2))) {
        report.pair_coefficients.pass();
      } else {
        report.pair_coefficients.fail(pair_text(a, b) + ": f = " + to_string(f) + ", g = " + to_string(g));
      }

      bool disjoint = (graph.neighbors(a) & graph.neighbors(b)) == 0;
      if ((f.coeff(2) == g.coeff(2)) == disjoint) {
        report.quadratic_tie.pass();
      } else {
        report.quadratic_tie.fail(pair_text(a, b) + ": [2]f = " + to_string(f.coeff(2)) +
                                  ", [2]g = " + to_string(g.coeff(2)) +
                                  (disjoint ? ", neighbourhoods disjoint" : ", common neighbour"));
      }

      const Polynomial four_f_gap = f * Rational(4) - base_power;
      if (!delta_p2) {
        report.quadratic_transfer.skip();
      } else if (divide_by_p_power(four_f_gap, 2)) {
        report.quadratic_transfer.pass();
      } else {
        report.quadratic_transfer.fail(pair_text(a, b) + ": 4f - (p-1)^e = " + to_string(four_f_gap));
      }

      const Graph plus = graph.with_edge(a, b);
      const Polynomial density_plus = hom_density_up(plus, budget);
      const Polynomial delta_plus = density_plus - edge_power(e + 1);
      if (density_plus == p * f * Rational(4) - density && delta_plus == p * four_f_gap - delta_h) {
        report.edge_addition.pass();
      } else {
        report.edge_addition.fail(pair_text(a, b) + ": t(H+ab) = " + to_string(density_plus));
      }

      if (four_f_gap.coeff(2) * parity >= 0) {
        report.quadratic_sign.pass();
      } else {
        report.quadratic_sign.fail(pair_text(a, b) + ": [2](4f - (p-1)^e) = " + to_string(four_f_gap.coeff(2)));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

StepKernel lifted_up_kernel(const Rational& p) {
  return constant_kernel({Rational(1, 2), Rational(1, 2)}, {{p, Rational(0)}, {Rational(0), p}});
}

namespace {

void require_unit_interval(const StepKernel& kernel) {
  if (!kernel.is_constant()) throw PreconditionError("colouring kernel must have constant entries");
  for (int i = 0; i < kernel.blocks(); ++i) {
    for (int j = 0; j < kernel.blocks(); ++j) {
      Rational v = kernel.constant_entry(i, j);
      if (v < 0 || v > 1) {
        throw PreconditionError("colouring kernel entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + to_string(v) + " outside [0, 1]");
      }
    }
  }
}

Rational rational_power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

Rational inequality_check(const Graph& graph, const StepKernel& kernel, std::uint64_t budget) {
  require_unit_interval(kernel);
  const StepKernel other = kernel.complement();
  const Graph edge = named::complete(2);
  Rational lhs = hom_density(graph, kernel, budget).coeff(0) + hom_density(graph, other, budget).coeff(0);
  Rational rhs = rational_power(hom_density(edge, kernel, budget).coeff(0), graph.m()) +
                 rational_power(hom_density(edge, other, budget).coeff(0), graph.m());
  return lhs - rhs;
}

ExpansionCheck expansion_identity(const Graph& graph, const StepKernel& kernel, const CertifyOptions& options) {
  require_unit_interval(kernel);
  const auto budget = options.assignment_budget;
  const StepKernel other = kernel.complement();
  const StepKernel signed_kernel = kernel.signed_version();
  const Graph edge = named::complete(2);
  const int e = graph.m();
  const Rational scale = pow2(1 - e);
  const Rational edge_signed = hom_density(edge, signed_kernel, budget).coeff(0);

  Rational density_sum = 1;
  Rational edge_sum = 1;
  for (const auto& cls : even_spanning_subgraphs(graph, options.max_subset_bits)) {
    Rational weight(Integer(static_cast<unsigned long>(cls.multiplicity)));
    density_sum += weight * hom_density(cls.representative, signed_kernel, budget).coeff(0);
    edge_sum += weight * rational_power(edge_signed, cls.edge_count);
  }

  ExpansionCheck out;
  out.density_lhs = hom_density(graph, kernel, budget).coeff(0) + hom_density(graph, other, budget).coeff(0);
  out.density_rhs = scale * density_sum;
  out.edge_lhs = rational_power(hom_density(edge, kernel, budget).coeff(0), e) +
                 rational_power(hom_density(edge, other, budget).coeff(0), e);
  out.edge_rhs = scale * edge_sum;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial epsilon_polynomial(const std::vector<ClassDelta>& classes, const Rational& p) {
  std::vector<Rational> coeffs;
  for (const auto& c : classes) {
    auto degree = static_cast<std::size_t>(c.cls.edge_count);
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += Rational(Integer(static_cast<unsigned long>(c.cls.multiplicity))) * eval(c.delta, p);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

LocalWitness local_witness(const Graph& graph, const CertifyOptions& options) {
  DeficitCertificate cert = certify_not_strongly_common(graph, options);
  if (!cert.applicable) throw PreconditionError("local witness: not applicable, " + cert.reason);

  LocalWitness out;
  out.p = *cert.witness_p;
  for (int halving = 0;; ++halving) {
    out.epsilon_polynomial = epsilon_polynomial(cert.classes, out.p);
    auto lowest = lowest_nonzero_index(out.epsilon_polynomial);
    if (lowest && out.epsilon_polynomial.coeff(*lowest) < 0) break;
    if (halving == options.max_halvings) {
      throw Error("local witness: no p with a negative lowest-order term for " + cert.canon);
    }
    out.p /= 2;
  }

  Rational eps = 1;
  for (int halving = 0; halving <= options.max_halvings; ++halving, eps /= 2) {
    std::vector<Rational> samples{eps, eps / 2, eps / 4};
    std::vector<Rational> values;
    for (const auto& s : samples) values.push_back(eval(out.epsilon_polynomial, s));
    if (std::all_of(values.begin(), values.end(), [](const Rational& v) { return v < 0; })) {
      out.epsilon0 = eps;
      out.sampled_epsilons = std::move(samples);
      out.values = std::move(values);
      return out;
    }
  }
  throw Error("local witness: no epsilon0 found for " + cert.canon);
}

GirthReport girth_explorer(const Graph& graph, const CertifyOptions& options) {
  GirthReport out;
  out.girth = girth(graph);
  out.deficit = deficit(graph, options).total;
  out.lowest_index = lowest_nonzero_index(out.deficit);
  if (out.lowest_index) out.lowest_sign = sign(out.deficit.coeff(*out.lowest_index));
  return out;
}

}  // namespace strongcommon
