#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "strongcommon/graph.hpp"
#include "strongcommon/polynomial.hpp"

namespace strongcommon {

// Default cap on the number of block assignments enumerated by one density
// call (2^24 for a two-block kernel).
inline constexpr std::uint64_t kDefaultAssignmentBudget = std::uint64_t{1} << 24;

// Symmetric step kernel with k blocks of positive rational measure summing to
// one. Entries are polynomials in p; constant kernels use degree-0 entries.
class StepKernel {
 public:
  // Throws PreconditionError if the invariants fail.
  StepKernel(std::vector<Rational> measures, std::vector<std::vector<Polynomial>> entries);

  int blocks() const { return static_cast<int>(measures_.size()); }
  const std::vector<Rational>& measures() const { return measures_; }
  const Polynomial& entry(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  bool is_constant() const;
  // Entry (i, j) as a rational; requires is_constant().
  Rational constant_entry(int i, int j) const { return entry(i, j).coeff(0); }

  // Kernel 1 - K and 2K - 1, entrywise.
  StepKernel complement() const;
  StepKernel signed_version() const;

 private:
  std::vector<Rational> measures_;
  std::vector<std::vector<Polynomial>> entries_;
};

// Constant kernel from a measure list and a symmetric value matrix.
StepKernel constant_kernel(std::vector<Rational> measures, const std::vector<std::vector<Rational>>& values);

// U_p: two blocks of measure 1/2, 2p - 1 inside a block, -1 across.
StepKernel up_kernel();

// Exact homomorphism density t_H(K). Two-block kernels with equal measures
// and equal diagonal entries (U_p among them) go through the Gray-code
// histogram engine; everything else through the generic block enumeration.
// The empty-edge graph has density 1. Throws BudgetExceeded when k^v(H)
// exceeds `budget`.
Polynomial hom_density(const Graph& graph, const StepKernel& kernel,
                       std::uint64_t budget = kDefaultAssignmentBudget);

// Generic path only: sum over all k^v(H) block maps of the product of vertex
// measures and entry polynomials.
Polynomial hom_density_generic(const Graph& graph, const StepKernel& kernel,
                               std::uint64_t budget = kDefaultAssignmentBudget);

// t_H(U_p) via the histogram engine.
Polynomial hom_density_up(const Graph& graph, std::uint64_t budget = kDefaultAssignmentBudget);

// Counts of block assignments of the U_p engine by number of monochromatic
// edges: result[m] is the number of maps V(H) -> {0,1} (with vertices in
// pinned_mask fixed to their bit in pinned_ones) having m edges inside a
// block.
std::vector<std::uint64_t> monochromatic_histogram(const Graph& graph, VertexMask pinned_mask = 0,
                                                   VertexMask pinned_ones = 0);

// Integral of the U_p edge product over x_a in block_a, x_b in block_b
// (blocks 0 or 1), all other variables free.
Polynomial pinned_density(const Graph& graph, int a, int b, int block_a, int block_b,
                          std::uint64_t budget = kDefaultAssignmentBudget);

// f: a and b pinned to the same block; g: pinned to different blocks.
struct DensityPair {
  Polynomial f;
  Polynomial g;
  int a = 0;
  int b = 0;
};

// Throws PreconditionError if a or b is not a vertex, a == b, or ab is an
// edge.
DensityPair restricted_densities(const Graph& graph, int a, int b,
                                 std::uint64_t budget = kDefaultAssignmentBudget);

// Second engine for t_H(U_p): removes the lexicographically last edge ab and
// applies t_H = 4p * f_{a,b,H-ab} - t_{H-ab}, down to the edgeless graph.
// Values are memoized by canonical form for cores with at most
// kMemoVertexCap vertices. Safe for concurrent use.
class RecurrenceEngine {
 public:
  static constexpr int kMemoVertexCap = 10;

  explicit RecurrenceEngine(std::uint64_t budget = kDefaultAssignmentBudget) : budget_(budget) {}

  Polynomial density(const Graph& graph);
  std::size_t memo_size() const;

 private:
  std::uint64_t budget_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> memo_;
};

Polynomial hom_density_recurrence(const Graph& graph, std::uint64_t budget = kDefaultAssignmentBudget);

// t_F(U_p) memoized by canonical form, for workloads that evaluate the same
// small classes over and over. Concurrent lookups; inserts are idempotent.
class UpDensityCache {
 public:
  explicit UpDensityCache(std::uint64_t budget = kDefaultAssignmentBudget) : budget_(budget) {}

  // `canon` must be canonical_form(graph).
  Polynomial density(const Graph& graph, const std::string& canon);
  Polynomial density(const Graph& graph) { return density(graph, canonical_form(graph)); }
  std::size_t size() const;

 private:
  std::uint64_t budget_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> values_;
};

}  // namespace strongcommon
