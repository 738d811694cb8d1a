#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongcommon/density.hpp"
#include "strongcommon/graph.hpp"
#include "strongcommon/polynomial.hpp"

namespace strongcommon {

struct CertifyOptions {
  std::uint64_t assignment_budget = kDefaultAssignmentBudget;
  int max_subset_bits = kDefaultSubsetBits;
  int max_halvings = 64;
  // Shared t_F(U_p) memo; a private one is used when null.
  UpDensityCache* cache = nullptr;
};

// Delta_H(p) = t_H(U_p) - (p - 1)^e(H) and the facts derived from it.
struct DeltaReport {
  std::string canon;
  Polynomial delta;
  Rational c3;
  bool p3_divisible = false;
  bool p4_divisible = false;
  bool has_triangle = false;
};

DeltaReport delta(const Graph& graph, const CertifyOptions& options = {});

// Delta_F for a graph whose density is already known.
Polynomial delta_from_density(const Polynomial& density, int edges);

struct ClassDelta {
  SubgraphClass cls;
  Polynomial delta;
};

struct Deficit {
  std::vector<ClassDelta> classes;
  // sum over classes of multiplicity * Delta_F
  Polynomial total;
};

// Sum of Delta_F over all spanning subgraphs F with a positive even number of
// edges, grouped into isomorphism classes.
Deficit deficit(const Graph& graph, const CertifyOptions& options = {});

// The same sum taken subset by subset with no grouping or memo.
Polynomial deficit_raw(const Graph& graph, const CertifyOptions& options = {});

// Largest p in {1/2, 1/4, ...} with poly(p) < 0. Requires p^3 | poly and a
// negative p^3 coefficient (PreconditionError otherwise); throws Error if no
// such p is found within max_halvings halvings.
Rational find_negative_witness(const Polynomial& poly, int max_halvings = 64);

// Evidence that a graph is not strongly common: the deficit is exactly
// negative at witness_p.
struct DeficitCertificate {
  Graph graph;
  std::string canon;
  bool applicable = false;
  std::string reason;
  std::vector<ClassDelta> classes;
  Polynomial deficit;
  Rational c3;
  std::optional<Rational> witness_p;
  std::optional<Rational> witness_value;
};

// Applicable iff the graph has a triangle and at least four edges; otherwise
// the certificate carries the reason ("no triangle" or "does not properly
// contain a triangle (e=3)") and no witness.
DeficitCertificate certify_not_strongly_common(const Graph& graph, const CertifyOptions& options = {});

// ---------------------------------------------------------------------------
// Instance checks of the structural facts about U_p densities.

enum class CheckStatus { kPass, kVacuous, kFail };

std::string_view to_string(CheckStatus status);

struct LemmaCheck {
  CheckStatus status = CheckStatus::kVacuous;
  int instances = 0;   // graphs or pairs where the hypothesis held
  int vacuous = 0;     // graphs or pairs where it did not
  std::string detail;  // first failing datum

  void pass() {
    ++instances;
    if (status == CheckStatus::kVacuous) status = CheckStatus::kPass;
  }
  void skip() { ++vacuous; }
  void fail(std::string what);
  bool ok() const { return status != CheckStatus::kFail; }
};

struct LemmaReport {
  std::string canon;
  int pairs = 0;
  // Per nonadjacent pair (a, b), with f, g the restricted densities:
  LemmaCheck pair_coefficients;   // [j]f*[j]g >= 0, [0]f=[0]g, [1]f=[1]g, |[2]f| >= |[2]g|
  LemmaCheck quadratic_tie;       // [2]f = [2]g  iff  N(a) and N(b) are disjoint
  LemmaCheck quadratic_transfer;  // p^2 | Delta_H  implies  p^2 | 4f - (p-1)^e
  LemmaCheck edge_addition;       // t_{H+ab} = 4p f - t_H and the matching Delta identity
  LemmaCheck quadratic_sign;      // (-1)^e [2](4f - (p-1)^e) >= 0
  // Per graph:
  LemmaCheck cubic_divisibility;     // p^3 | Delta_H
  LemmaCheck triangle_free_quartic;  // no triangle  implies  p^4 | Delta_H
  LemmaCheck triangle_cubic_sign;    // triangle  implies  sign [3]Delta_H = (-1)^(e-1)

  std::vector<std::pair<std::string_view, const LemmaCheck*>> checks() const;
  bool all_pass() const;
};

LemmaReport verify_lemma_suite(const Graph& graph, const CertifyOptions& options = {});

// ---------------------------------------------------------------------------
// The colouring inequality and its multilinear expansion.

// W = (1 + U_p) / 2 at a concrete p: p inside a block, 0 across.
StepKernel lifted_up_kernel(const Rational& p);

// t_H(W) + t_H(1-W) - t_K2(W)^e - t_K2(1-W)^e for a constant kernel with
// entries in [0, 1]; negative means W violates the inequality.
Rational inequality_check(const Graph& graph, const StepKernel& kernel,
                          std::uint64_t budget = kDefaultAssignmentBudget);

struct ExpansionCheck {
  Rational density_lhs;  // t_H(W) + t_H(1-W)
  Rational density_rhs;  // 2^(1-e) (1 + sum_F t_F(2W-1))
  Rational edge_lhs;     // t_K2(W)^e + t_K2(1-W)^e
  Rational edge_rhs;     // 2^(1-e) (1 + sum_F t_K2(2W-1)^e(F))
  bool holds() const { return density_lhs == density_rhs && edge_lhs == edge_rhs; }
};

ExpansionCheck expansion_identity(const Graph& graph, const StepKernel& kernel,
                                  const CertifyOptions& options = {});

// ---------------------------------------------------------------------------

// Witness against local strong commonness: at the chosen p the polynomial
// sum_F eps^e(F) Delta_F(p) is negative at every sampled eps in (0, epsilon0].
struct LocalWitness {
  Rational p;
  Polynomial epsilon_polynomial;
  Rational epsilon0;
  std::vector<Rational> sampled_epsilons;
  std::vector<Rational> values;
};

// p starts at the certificate witness and is halved until the lowest-order
// eps coefficient is negative; epsilon0 is the largest of 1, 1/2, ... with
// negative values at epsilon0, epsilon0/2 and epsilon0/4. Throws
// PreconditionError when the graph is not applicable.
LocalWitness local_witness(const Graph& graph, const CertifyOptions& options = {});

struct GirthReport {
  std::optional<int> girth;
  Polynomial deficit;
  std::optional<std::size_t> lowest_index;
  int lowest_sign = 0;
};

GirthReport girth_explorer(const Graph& graph, const CertifyOptions& options = {});

}  // namespace strongcommon
