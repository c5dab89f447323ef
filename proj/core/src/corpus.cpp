#include "chromstab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "chromstab/graph_io.hpp"

namespace chromstab {

Corpus Corpus::enumeration(int from_n, int to_n, int limit) {
  if (from_n > to_n) throw std::invalid_argument("enumeration range is empty");
  Corpus c;
  for (int n = from_n; n <= to_n; ++n) c.blocks_.emplace_back(n, limit);
  c.description_ = from_n == to_n ? "enumerate n=" + std::to_string(to_n)
                                  : "enumerate n=" + std::to_string(from_n) + ".." +
                                        std::to_string(to_n);
  return c;
}

Corpus Corpus::from_graph6(std::istream& in, std::string description) {
  Corpus c;
  c.description_ = std::move(description);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty() || line.front() == '>' || line.front() == '#') continue;
    try {
      c.graphs_.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      c.failures_.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw CorpusIoError("read error in " + c.description_);
  return c;
}

Corpus Corpus::from_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusIoError("cannot open graph6 file '" + path + "'");
  return from_graph6(in, "graph6 file " + path);
}

Corpus Corpus::from_graphs(std::vector<Graph> graphs, std::string description) {
  Corpus c;
  c.graphs_ = std::move(graphs);
  c.description_ = std::move(description);
  return c;
}

std::uint64_t Corpus::size() const {
  std::uint64_t total = graphs_.size();
  for (const auto& b : blocks_) total += b.count();
  return total;
}

Graph Corpus::at(std::uint64_t index) const {
  for (const auto& b : blocks_) {
    if (index < b.count()) return b.at(index);
    index -= b.count();
  }
  if (index >= graphs_.size()) throw std::out_of_range("corpus index out of range");
  return graphs_[index];
}

int Corpus::max_order() const {
  int best = 0;
  for (const auto& b : blocks_) best = std::max(best, b.order());
  for (const auto& g : graphs_) best = std::max(best, g.order());
  return best;
}

}  // namespace chromstab
