#pragma once

#include <numeric>
#include <vector>

namespace qal::detail {

class DisjointSet {
 public:
  explicit DisjointSet(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    sets_ = n;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index is the root
    --sets_;
    return true;
  }

  int sets() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_ = 0;
};

}  // namespace qal::detail
