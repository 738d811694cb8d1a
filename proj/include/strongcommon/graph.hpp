#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strongcommon/error.hpp"

namespace strongcommon {

// Hard limit of the graph type; adjacency rows are 32-bit masks.
inline constexpr int kMaxVertices = 30;
// Default operational cap (2^24 block assignments for the U_p engine).
inline constexpr int kDefaultVertexCap = 24;
// Default limit on e(H) for even-subgraph enumeration (2^(e-1) subsets).
inline constexpr int kDefaultSubsetBits = 26;
// Largest core handled by canonical_form.
inline constexpr int kCanonicalVertexCap = 16;
// Largest core handled by canonical_form_exhaustive (n! relabelings).
inline constexpr int kExhaustiveCanonicalCap = 10;

using VertexMask = std::uint32_t;

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Small simple undirected graph on vertices 0..n-1. Edges are stored sorted
// with u < v; the adjacency masks always describe the same relation.
// Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws PreconditionError on self-loops, duplicate edges, out-of-range
  // endpoints or n outside [0, kMaxVertices].
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexMask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> adjacency() const { return adjacency_; }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1u; }
  int degree(int v) const;
  VertexMask vertex_mask() const { return (VertexMask{1} << n_) - 1u; }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // Same graph with `count` extra isolated vertices appended.
  Graph with_isolated_vertices(int count) const;
  // Drops isolated vertices, keeping the relative order of the rest.
  Graph core() const;
  // Vertex v of this graph becomes vertex new_label[v].
  Graph relabeled(std::span<const int> new_label) const;
  // Spanning subgraph keeping edges()[i] for every set bit i of edge_mask.
  Graph edge_subgraph(std::uint64_t edge_mask) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

// Frequently used graphs.
namespace named {
Graph complete(int n);
Graph cycle(int n);
// Path with `edges` edges on edges + 1 vertices.
Graph path(int edges);
Graph star(int leaves);
// Triangle with a pendant edge: {01, 02, 12, 23}.
Graph paw();
// K4 minus an edge: two triangles sharing edge {0,1}.
Graph diamond();
// Two triangles sharing vertex 0.
Graph bowtie();
// Vertices a=0, b=1 with common neighbour 2: edges {02, 12}.
Graph cherry();
}  // namespace named

// ---------------------------------------------------------------------------
// Interchange formats

enum class Graph6Fault {
  kEmpty,
  kMalformedHeader,
  kBadCharacter,
  kWrongLength,
  kTrailingBits,
  kTooManyVertices,
};

class Graph6Error : public ParseError {
 public:
  Graph6Error(Graph6Fault fault, const std::string& what) : ParseError(what), fault_(fault) {}
  Graph6Fault fault() const { return fault_; }

 private:
  Graph6Fault fault_;
};

// Decodes one graph6 token (no ">>graph6<<" header). Surrounding whitespace
// is ignored.
Graph parse_graph6(std::string_view text, int max_vertices = kMaxVertices);
std::string to_graph6(const Graph& graph);

// Lines of "u v" pairs; an optional first line "n=<k>" fixes the vertex
// count, otherwise it is one more than the largest index. Blank lines and
// '#' comments are skipped.
Graph parse_edge_list(std::string_view text, int max_vertices = kMaxVertices);

// ---------------------------------------------------------------------------
// Canonical forms

// Canonical label of the core (isolated vertices dropped): the graph6 string
// of the relabeling whose upper-triangle bitstring (graph6 bit order) is
// lexicographically minimal among relabelings that respect the
// colour-refinement cell order. Equal iff the cores are isomorphic.
// Throws BudgetExceeded when the core has more than kCanonicalVertexCap
// vertices.
std::string canonical_form(const Graph& graph);

// Core relabeled into canonical position; to_graph6 of it equals
// canonical_form(graph).
Graph canonical_graph(const Graph& graph);

// Same contract, minimizing over all n! relabelings of the core. Kept as an
// independent reference; labels differ from canonical_form but induce the
// same equivalence. Throws BudgetExceeded above kExhaustiveCanonicalCap.
std::string canonical_form_exhaustive(const Graph& graph);

// ---------------------------------------------------------------------------
// Structure

// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& graph);
bool has_triangle(const Graph& graph);

// An isomorphism class of spanning subgraphs of a host with a positive even
// number of edges.
struct SubgraphClass {
  Graph representative;  // canonical core, no isolated vertices
  std::string canon;
  std::uint64_t multiplicity = 0;
  int edge_count = 0;
};

// Every edge subset of positive even size, grouped by canonical_form of its
// core. Sorted by (edge_count, canon). Multiplicities sum to 2^(m-1) - 1.
// Throws BudgetExceeded when m > max_subset_bits.
std::vector<SubgraphClass> even_spanning_subgraphs(const Graph& host,
                                                   int max_subset_bits = kDefaultSubsetBits);

// The same family without deduplication: one spanning subgraph per subset,
// in increasing edge-mask order.
std::vector<Graph> even_spanning_subgraphs_raw(const Graph& host,
                                               int max_subset_bits = kDefaultSubsetBits);

// ---------------------------------------------------------------------------
// Triangle trees

struct TriangleTreeStep {
  enum class Kind { kVertex, kEdge };
  Kind kind = Kind::kVertex;
  // Vertex id, or position in the current graph's sorted edge list.
  int index = 0;
};

struct TriangleTreeSpec {
  std::vector<TriangleTreeStep> steps;
};

// Replays the steps starting from K3. A vertex step glues a new triangle at
// one vertex (two new vertices); an edge step glues it along an edge (one new
// vertex). Throws PreconditionError on a dangling index.
Graph gen_triangle_tree(const TriangleTreeSpec& spec);

// Parses "v0,e1,v3" (comma separated, v = vertex step, e = edge step).
// The empty string is the bare triangle.
TriangleTreeSpec parse_triangle_tree(std::string_view text);

// ---------------------------------------------------------------------------
// Enumeration

// One representative of every isomorphism class of graphs on exactly n
// vertices, sorted by (m, canonical_form). Built by extending the classes on
// n - 1 vertices with every possible neighbourhood of a new vertex.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace strongcommon
