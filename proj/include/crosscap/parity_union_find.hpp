#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace crosscap {

// Union-find over ±1 labels: unite(a, b, p) records label(a) * label(b) == p.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    parity_.assign(n, 1);
    rank_.assign(n, 0);
    conflict_.assign(n, false);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    parity_.push_back(1);
    rank_.push_back(0);
    conflict_.push_back(false);
    return static_cast<int>(parent_.size()) - 1;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  // Returns the root and the label of x relative to the root's label.
  std::pair<int, int> find(int x) {
    int p = 1;
    int r = x;
    while (parent_[r] != r) {
      p *= parity_[r];
      r = parent_[r];
    }
    // path compression
    int cur = x;
    int cp = p;
    while (parent_[cur] != cur) {
      const int next = parent_[cur];
      const int np = cp * parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cp;
      cur = next;
      cp = np;
    }
    return {r, p};
  }

  // Returns false when the constraint contradicts earlier ones; the class is
  // then marked inconsistent.
  bool unite(int a, int b, int p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if (pa * pb != p) {
        conflict_[ra] = true;
        return false;
      }
      return true;
    }
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa * pb * p;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    conflict_[ra] = conflict_[ra] || conflict_[rb];
    return true;
  }

  bool consistent(int x) { return !conflict_[find(x).first]; }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
  std::vector<bool> conflict_;
};

}  // namespace crosscap
