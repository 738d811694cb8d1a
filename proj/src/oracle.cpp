#include "strongcommon/oracle.hpp"

namespace strongcommon::oracle {

namespace {

struct NestedMaps {
  const Graph& graph;
  const WeightedGraph& target;
  std::vector<int> image;
  Rational total = 0;

  // Assigns vertex v after vertices 0..v-1 have images; `partial` already
  // holds the weights of those vertices and of the edges among them.
  void extend(int v, const Rational& partial) {
    if (v == graph.n()) {
      total += partial;
      return;
    }
    for (int node = 0; node < target.size(); ++node) {
      Rational value = partial * target.vertex_weights[static_cast<std::size_t>(node)];
      for (int u = 0; u < v; ++u) {
        if (graph.adjacent(u, v)) {
          value *= target.edge_weights[static_cast<std::size_t>(image[static_cast<std::size_t>(u)])]
                                      [static_cast<std::size_t>(node)];
        }
      }
      image[static_cast<std::size_t>(v)] = node;
      extend(v + 1, value);
    }
  }
};

}  // namespace

WeightedGraph make_weighted_graph(std::vector<Rational> vertex_weights,
                                  std::vector<std::vector<Rational>> edge_weights) {
  const std::size_t n = vertex_weights.size();
  Rational sum = 0;
  for (const auto& w : vertex_weights) {
    if (w <= 0) throw PreconditionError("weighted graph: node weights must be positive");
    sum += w;
  }
  if (sum != 1) throw PreconditionError("weighted graph: node weights must sum to 1");
  if (edge_weights.size() != n) throw PreconditionError("weighted graph: edge matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (edge_weights[i].size() != n) throw PreconditionError("weighted graph: edge matrix has wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      if (edge_weights[i][j] != edge_weights[j][i]) throw PreconditionError("weighted graph: edge matrix not symmetric");
    }
  }
  return WeightedGraph{std::move(vertex_weights), std::move(edge_weights)};
}

WeightedGraph up_weighted_graph(const Rational& p) {
  Rational inside = 2 * p - 1;
  Rational across = -1;
  return make_weighted_graph({Rational(1, 2), Rational(1, 2)}, {{inside, across}, {across, inside}});
}

Rational hom_density_numeric(const Graph& graph, const WeightedGraph& target, std::uint64_t budget) {
  double maps = 1;
  for (int v = 0; v < graph.n(); ++v) maps *= target.size();
  if (maps * (graph.n() + graph.m() + 1) > static_cast<double>(budget)) {
    throw BudgetExceeded("oracle: " + std::to_string(target.size()) + "^" + std::to_string(graph.n()) +
                         " maps exceed the operation budget");
  }
  NestedMaps walk{graph, target, std::vector<int>(static_cast<std::size_t>(graph.n())), 0};
  walk.extend(0, Rational(1));
  return walk.total;
}

Rational numeric_delta(const Graph& graph, const Rational& p, std::uint64_t budget) {
  Rational edge = p - 1;
  Rational power = 1;
  for (int i = 0; i < graph.m(); ++i) power *= edge;
  return hom_density_numeric(graph, up_weighted_graph(p), budget) - power;
}

}  // namespace strongcommon::oracle
