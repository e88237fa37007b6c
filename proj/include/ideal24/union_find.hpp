#pragma once

#include <numeric>
#include <vector>

namespace ideal24 {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

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
    parent_[a] = b;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  /// Dense class ids numbered by first appearance; returns the number of classes.
  int labels(std::vector<int>& out) {
    out.assign(parent_.size(), -1);
    std::vector<int> root_label(parent_.size(), -1);
    int next = 0;
    for (int i = 0; i < size(); ++i) {
      const int r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      out[i] = root_label[r];
    }
    return next;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace ideal24
