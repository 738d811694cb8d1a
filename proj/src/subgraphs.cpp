#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "strongcommon/graph.hpp"

namespace strongcommon {

namespace {

void check_subset_budget(const Graph& host, int max_subset_bits) {
  if (host.m() > max_subset_bits || host.m() > 62) {
    throw BudgetExceeded("even-subgraph enumeration: e(H)=" + std::to_string(host.m()) +
                         " exceeds the subset budget of " + std::to_string(max_subset_bits) + " edges");
  }
}

// Calls visit(mask) for every edge subset of positive even size.
template <typename Visit>
void for_each_even_subset(const Graph& host, Visit&& visit) {
  const std::uint64_t limit = std::uint64_t{1} << host.m();
  for (std::uint64_t mask = 3; mask < limit; ++mask) {
    if (std::popcount(mask) % 2 == 0) visit(mask);
  }
}

}  // namespace

std::vector<SubgraphClass> even_spanning_subgraphs(const Graph& host, int max_subset_bits) {
  check_subset_budget(host, max_subset_bits);
  std::map<std::string, SubgraphClass> classes;
  for_each_even_subset(host, [&](std::uint64_t mask) {
    Graph sub = host.edge_subgraph(mask);
    Graph rep = canonical_graph(sub);
    std::string canon = to_graph6(rep);
    auto [it, inserted] = classes.try_emplace(canon);
    if (inserted) {
      it->second.representative = std::move(rep);
      it->second.canon = canon;
      it->second.edge_count = sub.m();
    }
    ++it->second.multiplicity;
  });
  std::vector<SubgraphClass> out;
  out.reserve(classes.size());
  for (auto& [canon, cls] : classes) out.push_back(std::move(cls));
  std::stable_sort(out.begin(), out.end(), [](const SubgraphClass& a, const SubgraphClass& b) {
    return a.edge_count < b.edge_count;
  });
  return out;
}

std::vector<Graph> even_spanning_subgraphs_raw(const Graph& host, int max_subset_bits) {
  check_subset_budget(host, max_subset_bits);
  std::vector<Graph> out;
  for_each_even_subset(host, [&](std::uint64_t mask) { out.push_back(host.edge_subgraph(mask)); });
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > 10) throw BudgetExceeded("graph enumeration supports 0 <= n <= 10");
  std::vector<Graph> level{Graph(0)};
  for (int size = 1; size <= n; ++size) {
    std::map<std::pair<int, std::string>, Graph> next;
    for (const auto& base : level) {
      const VertexMask subsets = VertexMask{1} << base.n();
      for (VertexMask nbrs = 0; nbrs < subsets; ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (VertexMask rest = nbrs; rest != 0; rest &= rest - 1) {
          edges.push_back({std::countr_zero(rest), base.n()});
        }
        Graph g(size, std::move(edges));
        next.try_emplace({g.m(), canonical_form(g)}, g);
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace strongcommon
