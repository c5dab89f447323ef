#include "chromstab/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace chromstab {

namespace {

constexpr int kOffset = 63;

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte < 63 || byte > 126) {
      throw ParseError("graph6: byte " + std::to_string(byte) + " at offset " + std::to_string(i) +
                       " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n == 63) throw ParseError("graph6: long form (n > 62) is not supported");
  if (n < 1) throw ParseError("graph6: order must be at least 1");

  const std::size_t bits = pair_count(n);
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - 1 < groups) throw ParseError("graph6: input too short for n=" + std::to_string(n));
  if (text.size() - 1 > groups) throw ParseError("graph6: trailing bytes after the adjacency data");

  std::vector<Word> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
      if ((group >> (5 - k % 6)) & 1) {
        rows[u] |= Word{1} << v;
        rows[v] |= Word{1} << u;
      }
    }
  }
  for (; k < groups * 6; ++k) {
    const int group = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
    if ((group >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_adjacency(n, rows);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside 1..62");
  }
  const std::size_t groups = (pair_count(n) + 5) / 6;
  std::string out(1 + groups, static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::vector<int> packed(groups, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.adjacent(u, v)) packed[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t i = 0; i < groups; ++i) out[1 + i] = static_cast<char>(packed[i] + kOffset);
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        const long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(value);
      } catch (const std::exception&) {
        throw ParseError("edge list: bad token '" + tok + "' on line " + std::to_string(line_no));
      }
    }
  }
  if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  if (n < 1 || n > kMaxVertices) throw ParseError("edge list: order outside 1..62");
  if (m < 0 || tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges but found " +
                     std::to_string((tokens.size() - 2) / 2) + " complete pairs");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const long long u = tokens[2 + 2 * i];
    const long long v = tokens[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace chromstab
