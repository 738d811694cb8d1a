#include <bit>
#include <algorithm>
#include <numeric>
#include <vector>

#include "strongcommon/graph.hpp"

namespace strongcommon {

namespace {

// Column i of the graph6 upper triangle under a slot ordering: bit (i-1-j)
// holds adjacency of the vertices in slots j < i, so comparing columns in
// order as integers compares the bitstrings lexicographically.
using Columns = std::vector<std::uint32_t>;

// Colour refinement starting from degrees. Colours are ranks of
// isomorphism-invariant signatures, so the ordered partition is invariant.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
        around.push_back(color[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    auto distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      color[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class CellSearch {
 public:
  explicit CellSearch(const Graph& g) : g_(g), n_(g.n()) {
    color_ = refine_colors(g);
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    order_.assign(static_cast<std::size_t>(n_), -1);
    current_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::vector<int> run() {
    search(0, 0, false);
    return best_order_;
  }

 private:
  void search(int slot, VertexMask used, bool less) {
    if (slot == n_) {
      if (best_order_.empty() || less) {
        best_ = current_;
        best_order_ = order_;
        ++updates_;
      }
      return;
    }
    const auto s = static_cast<std::size_t>(slot);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      if (color_[static_cast<std::size_t>(v)] != slot_color_[s]) continue;
      std::uint32_t column = 0;
      for (int j = 0; j < slot; ++j) {
        if (g_.adjacent(order_[static_cast<std::size_t>(j)], v)) column |= 1u << (slot - 1 - j);
      }
      bool child_less = less;
      if (!best_order_.empty() && !less) {
        if (column > best_[s]) continue;
        child_less = column < best_[s];
      }
      current_[s] = column;
      order_[s] = v;
      auto before = updates_;
      search(slot + 1, used | (VertexMask{1} << v), child_less);
      // A new best found below shares this prefix.
      if (updates_ != before) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<int> order_;
  Columns current_;
  Columns best_;
  std::vector<int> best_order_;
  std::size_t updates_ = 0;
};

Graph place(const Graph& core, const std::vector<int>& order) {
  std::vector<int> new_label(order.size());
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    new_label[static_cast<std::size_t>(order[slot])] = static_cast<int>(slot);
  }
  return core.relabeled(new_label);
}

}  // namespace

Graph canonical_graph(const Graph& graph) {
  Graph core = graph.core();
  if (core.n() > kCanonicalVertexCap) {
    throw BudgetExceeded("canonical form: core has " + std::to_string(core.n()) +
                         " vertices, cap is " + std::to_string(kCanonicalVertexCap));
  }
  if (core.n() == 0) return core;
  return place(core, CellSearch(core).run());
}

std::string canonical_form(const Graph& graph) { return to_graph6(canonical_graph(graph)); }

std::string canonical_form_exhaustive(const Graph& graph) {
  Graph core = graph.core();
  const int n = core.n();
  if (n > kExhaustiveCanonicalCap) {
    throw BudgetExceeded("exhaustive canonical form: core has " + std::to_string(n) +
                         " vertices, cap is " + std::to_string(kExhaustiveCanonicalCap));
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Columns best;
  std::vector<int> best_order;
  Columns columns(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) {
      std::uint32_t column = 0;
      for (int j = 0; j < i; ++j) {
        if (core.adjacent(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(i)])) {
          column |= 1u << (i - 1 - j);
        }
      }
      columns[static_cast<std::size_t>(i)] = column;
    }
    if (best_order.empty() || columns < best) {
      best = columns;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return to_graph6(place(core, best_order));
}

}  // namespace strongcommon
