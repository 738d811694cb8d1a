#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "strongcommon/graph.hpp"

namespace strongcommon {

namespace {

std::string edge_text(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0u);
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw PreconditionError("edge " + edge_text(e.u, e.v) + " out of range");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    VertexMask bit = VertexMask{1} << e.v;
    if (adjacency_[static_cast<std::size_t>(e.u)] & bit) {
      throw PreconditionError("duplicate edge " + edge_text(e.u, e.v));
    }
    adjacency_[static_cast<std::size_t>(e.u)] |= bit;
    adjacency_[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
  }
  std::sort(edges_.begin(), edges_.end());
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

Graph Graph::with_edge(int u, int v) const {
  auto edges = edges_;
  edges.push_back({u, v});
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto edges = edges_;
  auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end()) throw PreconditionError("edge " + edge_text(u, v) + " not present");
  edges.erase(it);
  return Graph(n_, std::move(edges));
}

Graph Graph::with_isolated_vertices(int count) const { return Graph(n_ + count, edges_); }

Graph Graph::core() const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (neighbors(v) != 0) label[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    edges.push_back({label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]});
  }
  return Graph(next, std::move(edges));
}

Graph Graph::relabeled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw PreconditionError("relabeling has wrong length");
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    edges.push_back({new_label[static_cast<std::size_t>(e.u)], new_label[static_cast<std::size_t>(e.v)]});
  }
  return Graph(n_, std::move(edges));
}

Graph Graph::edge_subgraph(std::uint64_t edge_mask) const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((edge_mask >> i) & 1u) edges.push_back(edges_[i]);
  }
  return Graph(n_, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return Graph(a.n() + b.n(), std::move(edges));
}

namespace named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path(int edges) {
  std::vector<Edge> list;
  for (int v = 0; v < edges; ++v) list.push_back({v, v + 1});
  return Graph(edges + 1, std::move(list));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph cherry() { return Graph(3, {{0, 2}, {1, 2}}); }

}  // namespace named

std::optional<int> girth(const Graph& graph) {
  // BFS from every vertex; a non-tree edge closing at depths d1, d2 bounds the
  // girth by d1 + d2 + 1, and the minimum over all roots is exact.
  const int n = graph.n();
  int best = 0;
  std::vector<int> depth(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (VertexMask rest = graph.neighbors(u); rest != 0; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (depth[wi] < 0) {
          depth[wi] = depth[ui] + 1;
          parent[wi] = u;
          queue.push_back(w);
        } else if (parent[ui] != w) {
          int length = depth[ui] + depth[wi] + 1;
          if (best == 0 || length < best) best = length;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

bool has_triangle(const Graph& graph) {
  return std::any_of(graph.edges().begin(), graph.edges().end(), [&](const Edge& e) {
    return (graph.neighbors(e.u) & graph.neighbors(e.v)) != 0;
  });
}

}  // namespace strongcommon
