#include <charconv>

#include "strongcommon/graph.hpp"

namespace strongcommon {

Graph gen_triangle_tree(const TriangleTreeSpec& spec) {
  Graph g = named::complete(3);
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const auto& step = spec.steps[i];
    std::vector<Edge> edges = g.edges();
    const int n = g.n();
    if (step.kind == TriangleTreeStep::Kind::kVertex) {
      if (step.index < 0 || step.index >= n) {
        throw PreconditionError("triangle-tree step " + std::to_string(i) + ": no vertex " +
                                std::to_string(step.index));
      }
      edges.push_back({step.index, n});
      edges.push_back({step.index, n + 1});
      edges.push_back({n, n + 1});
      g = Graph(n + 2, std::move(edges));
    } else {
      if (step.index < 0 || step.index >= g.m()) {
        throw PreconditionError("triangle-tree step " + std::to_string(i) + ": no edge " +
                                std::to_string(step.index));
      }
      Edge base = g.edges()[static_cast<std::size_t>(step.index)];
      edges.push_back({base.u, n});
      edges.push_back({base.v, n});
      g = Graph(n + 1, std::move(edges));
    }
  }
  return g;
}

TriangleTreeSpec parse_triangle_tree(std::string_view text) {
  TriangleTreeSpec spec;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (token.size() < 2 || (token[0] != 'v' && token[0] != 'e')) {
      throw ParseError("triangle-tree step '" + std::string(token) + "' must look like v<k> or e<k>");
    }
    TriangleTreeStep step;
    step.kind = token[0] == 'v' ? TriangleTreeStep::Kind::kVertex : TriangleTreeStep::Kind::kEdge;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), step.index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("triangle-tree step '" + std::string(token) + "' has a bad index");
    }
    spec.steps.push_back(step);
  }
  return spec;
}

}  // namespace strongcommon
