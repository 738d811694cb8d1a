#include "strongcommon/density.hpp"

#include <bit>
#include <mutex>

namespace strongcommon {

namespace {

void check_budget(std::uint64_t blocks, int vertices, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < vertices; ++i) {
    if (total > budget / blocks) {
      throw BudgetExceeded("density: " + std::to_string(blocks) + "^" + std::to_string(vertices) +
                           " block assignments exceed the budget of " + std::to_string(budget));
    }
    total *= blocks;
  }
}

bool is_symmetric_two_block(const StepKernel& kernel) {
  const Rational half(1, 2);
  return kernel.blocks() == 2 && kernel.measures()[0] == half && kernel.measures()[1] == half &&
         kernel.entry(0, 0) == kernel.entry(1, 1);
}

// 2^-n * sum_m counts[m] * inside^m * across^(e-m)
Polynomial combine_histogram(const std::vector<std::uint64_t>& counts, int vertices, int edges,
                             const Polynomial& inside, const Polynomial& across) {
  std::vector<Polynomial> inside_pow{Polynomial::constant(1)};
  std::vector<Polynomial> across_pow{Polynomial::constant(1)};
  for (int i = 1; i <= edges; ++i) {
    inside_pow.push_back(inside_pow.back() * inside);
    across_pow.push_back(across_pow.back() * across);
  }
  Polynomial total;
  for (int m = 0; m <= edges; ++m) {
    auto count = counts[static_cast<std::size_t>(m)];
    if (count == 0) continue;
    Integer weight(static_cast<unsigned long>(count));
    total += inside_pow[static_cast<std::size_t>(m)] * across_pow[static_cast<std::size_t>(edges - m)] *
             Rational(weight);
  }
  return total * pow2(-vertices);
}

template <typename Value, typename EntryFn>
Value generic_sum(const Graph& graph, const StepKernel& kernel, EntryFn&& entry, Value one) {
  const int n = graph.n();
  const int k = kernel.blocks();
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  Value total{};
  while (true) {
    Rational weight = 1;
    for (int v = 0; v < n; ++v) weight *= kernel.measures()[static_cast<std::size_t>(block[static_cast<std::size_t>(v)])];
    Value product = one;
    for (const auto& e : graph.edges()) {
      product = product * entry(block[static_cast<std::size_t>(e.u)], block[static_cast<std::size_t>(e.v)]);
    }
    total += product * weight;
    int v = 0;
    while (v < n && ++block[static_cast<std::size_t>(v)] == k) block[static_cast<std::size_t>(v++)] = 0;
    if (v == n) break;
  }
  return total;
}

}  // namespace

StepKernel::StepKernel(std::vector<Rational> measures, std::vector<std::vector<Polynomial>> entries)
    : measures_(std::move(measures)), entries_(std::move(entries)) {
  const std::size_t k = measures_.size();
  if (k == 0) throw PreconditionError("step kernel needs at least one block");
  Rational sum = 0;
  for (const auto& m : measures_) {
    if (m <= 0) throw PreconditionError("step kernel block measures must be positive");
    sum += m;
  }
  if (sum != 1) throw PreconditionError("step kernel block measures sum to " + to_string(sum) + ", not 1");
  if (entries_.size() != k) throw PreconditionError("step kernel entry matrix has wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    if (entries_[i].size() != k) throw PreconditionError("step kernel entry matrix has wrong size");
    for (std::size_t j = 0; j < i; ++j) {
      if (!(entries_[i][j] == entries_[j][i])) throw PreconditionError("step kernel entries are not symmetric");
    }
  }
}

bool StepKernel::is_constant() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (e.degree() > 0) return false;
    }
  }
  return true;
}

StepKernel StepKernel::complement() const {
  auto entries = entries_;
  for (auto& row : entries) {
    for (auto& e : row) e = Polynomial::constant(1) - e;
  }
  return StepKernel(measures_, std::move(entries));
}

StepKernel StepKernel::signed_version() const {
  auto entries = entries_;
  for (auto& row : entries) {
    for (auto& e : row) e = e * Rational(2) - Polynomial::constant(1);
  }
  return StepKernel(measures_, std::move(entries));
}

StepKernel constant_kernel(std::vector<Rational> measures, const std::vector<std::vector<Rational>>& values) {
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& row : values) {
    auto& out = entries.emplace_back();
    for (const auto& v : row) out.push_back(Polynomial::constant(v));
  }
  return StepKernel(std::move(measures), std::move(entries));
}

StepKernel up_kernel() {
  Polynomial inside = two_p_minus_one();
  Polynomial across = Polynomial::constant(-1);
  return StepKernel({Rational(1, 2), Rational(1, 2)}, {{inside, across}, {across, inside}});
}

std::vector<std::uint64_t> monochromatic_histogram(const Graph& graph, VertexMask pinned_mask,
                                                   VertexMask pinned_ones) {
  const int n = graph.n();
  const auto adj = graph.adjacency();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(graph.m()) + 1, 0);

  // Free vertices walk a reflected Gray code; with nothing pinned, vertex 0 is
  // held in block 0 and the counts doubled (swapping the blocks preserves m).
  bool mirror = pinned_mask == 0 && n > 0;
  VertexMask fixed = mirror ? VertexMask{1} : pinned_mask;
  std::vector<int> free;
  for (int v = 0; v < n; ++v) {
    if (!((fixed >> v) & 1u)) free.push_back(v);
  }
  VertexMask ones = pinned_ones & pinned_mask;
  int inside = 0;
  for (const auto& e : graph.edges()) {
    if (((ones >> e.u) & 1u) == ((ones >> e.v) & 1u)) ++inside;
  }
  const std::uint64_t steps = std::uint64_t{1} << free.size();
  counts[static_cast<std::size_t>(inside)] += 1;
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = free[static_cast<std::size_t>(std::countr_zero(i))];
    VertexMask row = adj[static_cast<std::size_t>(v)];
    VertexMask same = ((ones >> v) & 1u) ? (row & ones) : (row & ~ones);
    inside += std::popcount(row) - 2 * std::popcount(same);
    ones ^= VertexMask{1} << v;
    counts[static_cast<std::size_t>(inside)] += 1;
  }
  if (mirror) {
    for (auto& c : counts) c *= 2;
  }
  return counts;
}

Polynomial hom_density_up(const Graph& graph, std::uint64_t budget) {
  check_budget(2, graph.n(), budget);
  if (graph.m() == 0) return Polynomial::constant(1);
  auto counts = monochromatic_histogram(graph);
  return combine_histogram(counts, graph.n(), graph.m(), two_p_minus_one(), Polynomial::constant(-1));
}

Polynomial hom_density_generic(const Graph& graph, const StepKernel& kernel, std::uint64_t budget) {
  check_budget(static_cast<std::uint64_t>(kernel.blocks()), graph.n(), budget);
  if (kernel.is_constant()) {
    Rational value = generic_sum<Rational>(
        graph, kernel, [&](int i, int j) { return kernel.constant_entry(i, j); }, Rational(1));
    return Polynomial::constant(value);
  }
  return generic_sum<Polynomial>(
      graph, kernel, [&](int i, int j) -> const Polynomial& { return kernel.entry(i, j); },
      Polynomial::constant(1));
}

Polynomial hom_density(const Graph& graph, const StepKernel& kernel, std::uint64_t budget) {
  if (graph.m() == 0) {
    check_budget(static_cast<std::uint64_t>(kernel.blocks()), graph.n(), budget);
    return Polynomial::constant(1);
  }
  if (is_symmetric_two_block(kernel)) {
    check_budget(2, graph.n(), budget);
    auto counts = monochromatic_histogram(graph);
    return combine_histogram(counts, graph.n(), graph.m(), kernel.entry(0, 0), kernel.entry(0, 1));
  }
  return hom_density_generic(graph, kernel, budget);
}

Polynomial pinned_density(const Graph& graph, int a, int b, int block_a, int block_b, std::uint64_t budget) {
  const int n = graph.n();
  if (a < 0 || a >= n || b < 0 || b >= n) throw PreconditionError("pinned vertex out of range");
  if (a == b) throw PreconditionError("pinned vertices must be distinct");
  if ((block_a != 0 && block_a != 1) || (block_b != 0 && block_b != 1)) {
    throw PreconditionError("U_p has blocks 0 and 1 only");
  }
  check_budget(2, n - 2, budget);
  VertexMask pinned = (VertexMask{1} << a) | (VertexMask{1} << b);
  VertexMask ones = (block_a ? VertexMask{1} << a : 0u) | (block_b ? VertexMask{1} << b : 0u);
  auto counts = monochromatic_histogram(graph, pinned, ones);
  return combine_histogram(counts, n, graph.m(), two_p_minus_one(), Polynomial::constant(-1));
}

DensityPair restricted_densities(const Graph& graph, int a, int b, std::uint64_t budget) {
  if (a < 0 || a >= graph.n() || b < 0 || b >= graph.n()) {
    throw PreconditionError("restricted densities: vertex out of range");
  }
  if (a == b) throw PreconditionError("restricted densities: a and b must differ");
  if (graph.adjacent(a, b)) throw PreconditionError("restricted densities: a and b are adjacent");
  return DensityPair{pinned_density(graph, a, b, 0, 0, budget), pinned_density(graph, a, b, 0, 1, budget), a, b};
}

Polynomial RecurrenceEngine::density(const Graph& graph) {
  check_budget(2, graph.n(), budget_);
  if (graph.m() == 0) return Polynomial::constant(1);
  std::string key;
  bool memoize = graph.core().n() <= kMemoVertexCap;
  if (memoize) {
    key = canonical_form(graph);
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const Edge last = graph.edges().back();
  Graph reduced = graph.without_edge(last.u, last.v);
  Polynomial f = pinned_density(reduced, last.u, last.v, 0, 0, budget_);
  Polynomial value = Polynomial::monomial(4, 1) * f - density(reduced);
  if (memoize) {
    std::unique_lock lock(mutex_);
    memo_.try_emplace(key, value);
  }
  return value;
}

std::size_t RecurrenceEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Polynomial hom_density_recurrence(const Graph& graph, std::uint64_t budget) {
  RecurrenceEngine engine(budget);
  return engine.density(graph);
}

Polynomial UpDensityCache::density(const Graph& graph, const std::string& canon) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(canon); it != values_.end()) return it->second;
  }
  Polynomial value = hom_density_up(graph.core(), budget_);
  std::unique_lock lock(mutex_);
  return values_.try_emplace(canon, std::move(value)).first->second;
}

std::size_t UpDensityCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

}  // namespace strongcommon
