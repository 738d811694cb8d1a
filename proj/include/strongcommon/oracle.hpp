#pragma once

#include <cstdint>
#include <vector>

#include "strongcommon/graph.hpp"
#include "strongcommon/rational.hpp"

namespace strongcommon::oracle {

// Default cap on product operations (maps times factors per map).
inline constexpr std::uint64_t kDefaultOperationBudget = 100'000'000;

// A step kernel frozen at a concrete p: node weights are the block measures,
// edge weights the (rational) kernel values, loops included.
struct WeightedGraph {
  std::vector<Rational> vertex_weights;
  std::vector<std::vector<Rational>> edge_weights;

  int size() const { return static_cast<int>(vertex_weights.size()); }
};

// Checks symmetry, positive weights summing to one; throws PreconditionError.
WeightedGraph make_weighted_graph(std::vector<Rational> vertex_weights,
                                  std::vector<std::vector<Rational>> edge_weights);

// The two-node weighted graph of U_p at the given p.
WeightedGraph up_weighted_graph(const Rational& p);

// Sum over every map V(H) -> nodes of the product of node weights and edge
// weights, by plain nested enumeration. Throws BudgetExceeded.
Rational hom_density_numeric(const Graph& graph, const WeightedGraph& target,
                             std::uint64_t budget = kDefaultOperationBudget);

// t_H(U_p) - (p - 1)^e(H) at a concrete p.
Rational numeric_delta(const Graph& graph, const Rational& p,
                       std::uint64_t budget = kDefaultOperationBudget);

}  // namespace strongcommon::oracle
