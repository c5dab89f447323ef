#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromstab/enumerate.hpp"
#include "chromstab/graph.hpp"

namespace chromstab {

/// A graph6 line that could not be decoded. Line numbers are 1-based.
struct ParseFailure {
  std::size_t line = 0;
  std::string message;
};

/// Raised when a corpus file cannot be opened or read.
class CorpusIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Indexed, random-access collection of graphs: either a run of exhaustive
/// labeled enumerations or graphs loaded up front.
class Corpus {
 public:
  /// All labeled graphs with from_n <= n <= to_n, ordered by n then mask.
  static Corpus enumeration(int from_n, int to_n, int limit = kDefaultEnumerationLimit);
  /// One graph per line; empty lines and lines starting with '>' or '#' are
  /// skipped, a leading ">>graph6<<" header is stripped. Undecodable lines
  /// are recorded and skipped.
  static Corpus from_graph6(std::istream& in, std::string description);
  static Corpus from_graph6_file(const std::string& path);
  static Corpus from_graphs(std::vector<Graph> graphs, std::string description);

  const std::string& description() const { return description_; }
  std::uint64_t size() const;
  Graph at(std::uint64_t index) const;
  const std::vector<ParseFailure>& parse_failures() const { return failures_; }
  /// Largest order present (0 for an empty corpus).
  int max_order() const;

 private:
  std::string description_;
  std::vector<LabeledGraphs> blocks_;
  std::vector<Graph> graphs_;
  std::vector<ParseFailure> failures_;
};

}  // namespace chromstab
