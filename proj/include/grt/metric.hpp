#pragma once

#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "grt/error.hpp"
#include "grt/tree.hpp"

namespace grt {

// All-pairs distances of a finite metric space.  Symmetry and a zero
// diagonal are enforced on construction; the triangle inequality is checked
// on demand (it is O(n^3)).
class DistanceMatrix {
 public:
  DistanceMatrix(int size, std::vector<double> entries)
      : size_(size), entries_(std::move(entries)) {
    if (size_ < 1) throw Error("metric needs at least one point");
    if (entries_.size() != static_cast<size_t>(size_) * size_)
      throw Error("distance matrix entry count mismatch");
    for (int i = 0; i < size_; ++i) {
      if (entries_[idx(i, i)] != 0.0) throw Error("nonzero diagonal entry");
      for (int j = i + 1; j < size_; ++j) {
        if (entries_[idx(i, j)] != entries_[idx(j, i)])
          throw Error("distance matrix not symmetric");
        if (!(entries_[idx(i, j)] >= 0.0)) throw Error("negative distance");
      }
    }
  }

  int size() const { return size_; }
  double operator()(int i, int j) const { return entries_[idx(i, j)]; }

  DistanceMatrix scaled(double lambda) const {
    if (!(lambda > 0.0)) throw Error("scale factor must be positive");
    std::vector<double> e(entries_);
    for (double& x : e) x *= lambda;
    return DistanceMatrix(size_, std::move(e));
  }

  bool satisfies_triangle_inequality(double slack = 1e-12) const {
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        for (int k = 0; k < size_; ++k)
          if (entries_[idx(i, j)] >
              entries_[idx(i, k)] + entries_[idx(k, j)] + slack)
            return false;
    return true;
  }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * size_ + j;
  }

  int size_;
  std::vector<double> entries_;
};

// Exact all-pairs path distances, one breadth-first search per vertex.
// The quadratic table is the point, so very large trees are refused.
inline DistanceMatrix path_metric(const RootedTree& t, int size_cap = 4096) {
  const int n = t.vertex_count();
  if (n > size_cap)
    throw Error("tree has " + std::to_string(n) +
                " vertices; distance matrix capped at " +
                std::to_string(size_cap));
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  std::vector<int> dist(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : t.neighbors(u)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(src) * n + v] = dist[v];
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace grt
