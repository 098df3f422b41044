#pragma once

#include <numeric>
#include <vector>

namespace pga {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Class label per element, numbered by first occurrence.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> root_label(parent_.size(), parent_.size());
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      const std::size_t r = find(a);
      if (root_label[r] == parent_.size()) root_label[r] = next++;
      out[a] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace pga
