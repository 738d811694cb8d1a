#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

#include "strongcommon/graph.hpp"

namespace strongcommon {

namespace {

constexpr int kSixBitOffset = 63;

std::string_view trim(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

Graph parse_graph6(std::string_view text, int max_vertices) {
  text = trim(text);
  if (text.empty()) throw Graph6Error(Graph6Fault::kEmpty, "graph6: empty input");
  for (char c : text) {
    if (c < kSixBitOffset || c > 126) {
      throw Graph6Error(Graph6Fault::kBadCharacter,
                        "graph6: character '" + std::string(1, c) + "' outside the printable range");
    }
  }
  if (text.front() == 126) {
    // Only the single-byte size field is valid below 63 vertices.
    if (text.size() < 4) throw Graph6Error(Graph6Fault::kMalformedHeader, "graph6: truncated size field");
    long n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[static_cast<std::size_t>(i)] - kSixBitOffset);
    throw Graph6Error(Graph6Fault::kTooManyVertices,
                      "graph6: " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(max_vertices));
  }
  const int n = text.front() - kSixBitOffset;
  if (n > max_vertices) {
    throw Graph6Error(Graph6Fault::kTooManyVertices, "graph6: " + std::to_string(n) +
                                                         " vertices exceeds the cap of " +
                                                         std::to_string(max_vertices));
  }
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  std::string_view body = text.substr(1);
  if (body.size() != byte_count) {
    throw Graph6Error(Graph6Fault::kWrongLength, "graph6: expected " + std::to_string(byte_count) +
                                                     " data bytes for n=" + std::to_string(n) +
                                                     ", got " + std::to_string(body.size()));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = body[bit / 6] - kSixBitOffset;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (byte_count > 0) {
    int last = body.back() - kSixBitOffset;
    int padding = static_cast<int>(byte_count * 6 - bit_count);
    if (last & ((1 << padding) - 1)) {
      throw Graph6Error(Graph6Fault::kTrailingBits, "graph6: nonzero padding bits");
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& graph) {
  const int n = graph.n();
  std::string out(1, static_cast<char>(n + kSixBitOffset));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (graph.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kSixBitOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kSixBitOffset));
  return out;
}

Graph parse_edge_list(std::string_view text, int max_vertices) {
  std::istringstream lines{std::string(text)};
  std::string line;
  std::optional<int> forced_n;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  int max_index = -1;
  int line_no = 0;
  bool first_content = true;

  auto fail = [&](const std::string& why) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      fail("expected a nonnegative integer, got '" + std::string(token) + "'");
    }
    return value;
  };

  while (std::getline(lines, line)) {
    ++line_no;
    std::string_view content = line;
    if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    content = trim(content);
    if (content.empty()) continue;
    if (first_content && content.starts_with("n=")) {
      first_content = false;
      forced_n = parse_int(trim(content.substr(2)));
      continue;
    }
    first_content = false;
    std::istringstream tokens{std::string(content)};
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) fail("expected exactly two vertex indices");
    int u = parse_int(a);
    int v = parse_int(b);
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) {
      fail("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    }
    max_index = std::max(max_index, key.second);
    edges.push_back({key.first, key.second});
  }

  int n = forced_n.value_or(max_index + 1);
  if (forced_n && max_index >= *forced_n) {
    throw ParseError("edge list: vertex " + std::to_string(max_index) + " outside n=" + std::to_string(*forced_n));
  }
  if (n == 0) throw ParseError("edge list: no vertices");
  if (n > max_vertices) {
    throw ParseError("edge list: " + std::to_string(n) + " vertices exceeds the cap of " +
                     std::to_string(max_vertices));
  }
  return Graph(n, std::move(edges));
}

}  // namespace strongcommon
