#pragma once

#include <cstdint>
#include <vector>

#include "chromstab/graph.hpp"

namespace chromstab {

/// Default ceiling for exhaustive enumeration: 2^21 graphs at n = 7.
inline constexpr int kDefaultEnumerationLimit = 7;
/// Hard ceiling: the edge mask must fit in one word.
inline constexpr int kMaxEnumerationOrder = 11;

/// Every labeled simple graph on n vertices, indexed by edge mask. Bit i of
/// the mask is the i-th vertex pair in graph6 order (0,1), (0,2), (1,2),
/// (0,3), ... so index 0 is the edgeless graph and the last index is K_n.
/// Random access by index makes the sequence restartable and lets workers
/// split it into disjoint index ranges.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    Graph operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  /// Throws std::invalid_argument unless 1 <= n <= limit (limit itself is
  /// capped at kMaxEnumerationOrder).
  explicit LabeledGraphs(int n, int limit = kDefaultEnumerationLimit);

  int order() const { return n_; }
  std::uint64_t count() const { return count_; }
  Graph at(std::uint64_t index) const;

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  int n_;
  std::uint64_t count_;
  std::vector<Edge> pairs_;
};

}  // namespace chromstab
