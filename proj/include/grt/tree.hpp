#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "grt/error.hpp"

namespace grt {

// Downward degree sequence (d_0, d_1, ..., d_{r-1}) of a spherically
// symmetric tree: d_k children per vertex at depth k.  All entries >= 1.
using DegreeSequence = std::vector<int>;

inline constexpr int kDefaultVertexCap = 200000;

// Rooted unweighted tree.  Immutable after construction.  Vertex ids of
// generated trees run 0..n-1 in breadth-first order from the root, so
// truncations of the same family share id prefixes.
class RootedTree {
 public:
  // Validates that (vertex_count, root, edges) describe a tree and orients
  // it away from the root.  Edges are stored with u < v in ascending order.
  static RootedTree from_edges(int vertex_count, int root,
                               std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1) throw Error("vertex count must be positive");
    if (root < 0 || root >= vertex_count) throw Error("root id out of range");
    // No edge-count precheck: a surplus edge always closes a cycle and a
    // deficit always leaves the graph disconnected, and those two messages
    // name the actual defect.
    std::vector<int> uf(vertex_count);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
        throw Error("edge endpoint out of range");
      if (u == v) throw Error("not a tree: self-loop at " + std::to_string(u));
      if (u > v) std::swap(u, v);
      int ru = find(u), rv = find(v);
      if (ru == rv) throw Error("not a tree: cycle through " + std::to_string(u));
      uf[ru] = rv;
    }
    RootedTree t;
    t.root_ = root;
    t.adjacency_.assign(vertex_count, {});
    for (auto [u, v] : edges) {
      t.adjacency_[u].push_back(v);
      t.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges.begin(), edges.end());
    t.edges_ = std::move(edges);
    t.orient();
    return t;
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int root() const { return root_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }

  // Eccentricity of the root.
  int radius() const { return *std::max_element(depth_.begin(), depth_.end()); }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

  // Smallest-id leaf in the subtree hanging below v (v itself if v is a
  // leaf of that subtree).
  int smallest_leaf_below(int v) const {
    int best = -1;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (children_[u].empty()) {
        if (best < 0 || u < best) best = u;
      } else {
        for (int c : children_[u]) stack.push_back(c);
      }
    }
    return best;
  }

  // Smallest-id descendant of v at absolute depth d, or -1 if none.
  int smallest_descendant_at_depth(int v, int d) const {
    int best = -1;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (depth_[u] == d) {
        if (best < 0 || u < best) best = u;
        continue;
      }
      for (int c : children_[u]) stack.push_back(c);
    }
    return best;
  }

 private:
  RootedTree() = default;

  void orient() {
    const int n = vertex_count();
    parent_.assign(n, -1);
    depth_.assign(n, -1);
    children_.assign(n, {});
    std::queue<int> q;
    q.push(root_);
    depth_[root_] = 0;
    int seen = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++seen;
      for (int w : adjacency_[u]) {
        if (depth_[w] >= 0) continue;
        depth_[w] = depth_[u] + 1;
        parent_[w] = u;
        children_[u].push_back(w);
        q.push(w);
      }
    }
    if (seen != n) throw Error("disconnected: reached " + std::to_string(seen) +
                               " of " + std::to_string(n) + " vertices");
  }

  int root_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> children_;
};

namespace detail {

inline void check_vertex_cap(unsigned long long required, int cap) {
  if (required > static_cast<unsigned long long>(cap))
    throw Error("vertex cap exceeded: tree requires " +
                std::to_string(required) + " vertices, cap is " +
                std::to_string(cap));
}

}  // namespace detail

// Spherically symmetric tree with the given downward degree sequence; one
// level per entry, vertices numbered breadth-first.
inline RootedTree build_sst(const DegreeSequence& seq,
                            int vertex_cap = kDefaultVertexCap) {
  if (seq.empty()) throw Error("degree sequence must be nonempty");
  for (int d : seq)
    if (d < 1) throw Error("degree sequence entries must be >= 1");
  constexpr unsigned long long kSat = 1ull << 62;
  unsigned long long total = 1, level = 1;
  bool exact = true;
  for (int d : seq) {
    const auto dd = static_cast<unsigned long long>(d);
    if (level >= kSat / dd || total >= kSat - level * dd) {
      exact = false;
      break;
    }
    level *= dd;
    total += level;
  }
  if (!exact)
    throw Error("vertex cap exceeded: tree requires more than 2^62 vertices, "
                "cap is " + std::to_string(vertex_cap));
  detail::check_vertex_cap(total, vertex_cap);
  const int n = static_cast<int>(total);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int level_begin = 0, level_size = 1, next_id = 1;
  for (int d : seq) {
    for (int v = level_begin; v < level_begin + level_size; ++v)
      for (int c = 0; c < d; ++c) edges.emplace_back(v, next_id++);
    level_begin += level_size;
    level_size *= d;
  }
  return RootedTree::from_edges(n, 0, std::move(edges));
}

// Complete n-ary tree of the given depth: degree sequence (n, n, ..., n).
inline RootedTree build_complete_nary(int branching, int depth,
                                      int vertex_cap = kDefaultVertexCap) {
  if (branching < 2) throw Error("branching must be >= 2");
  if (depth < 1) throw Error("depth must be >= 1");
  return build_sst(DegreeSequence(depth, branching), vertex_cap);
}

// Truncation of the k-regular tree to the given radius: every internal
// non-root vertex has degree k, the root has degree k.
inline RootedTree build_kregular_truncation(int k, int r,
                                            int vertex_cap = kDefaultVertexCap) {
  if (k < 3) throw Error("degree must be >= 3");
  if (r < 1) throw Error("radius must be >= 1");
  DegreeSequence seq(r, k - 1);
  seq[0] = k;
  return build_sst(seq, vertex_cap);
}

// Star: one internal root surrounded by n leaves.
inline RootedTree build_star(int leaf_count) {
  if (leaf_count < 2) throw Error("star needs >= 2 leaves");
  return build_sst(DegreeSequence{leaf_count});
}

// Chain of stars: hubs of the stars Y_{n_min}..Y_{n_max} joined in a path,
// rooted at the hub of Y_{n_min}.
inline RootedTree build_ychain(int n_min, int n_max) {
  if (n_min < 2 || n_min > n_max) throw Error("need 2 <= n_min <= n_max");
  unsigned long long total = 0;
  for (int j = n_min; j <= n_max; ++j) total += static_cast<unsigned long long>(j) + 1;
  detail::check_vertex_cap(total, kDefaultVertexCap);
  const int n = static_cast<int>(total);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  // Breadth-first ids: each hub is followed by its leaves, then the next hub.
  int hub = 0, next_id = 1;
  for (int j = n_min; j <= n_max; ++j) {
    for (int leaf = 0; leaf < j; ++leaf) edges.emplace_back(hub, next_id++);
    if (j < n_max) {
      edges.emplace_back(hub, next_id);
      hub = next_id++;
    }
  }
  return RootedTree::from_edges(n, 0, std::move(edges));
}

// Tooth positions of a comb.  positions is strictly increasing, 1-based;
// shaft_length bounds all positions.
struct ToothSet {
  std::vector<int> positions;
  int shaft_length = 0;

  void validate() const {
    if (shaft_length < 1) throw Error("shaft length must be >= 1");
    int prev = 0;
    for (int s : positions) {
      if (s <= prev) throw Error("tooth positions must be strictly increasing and >= 1");
      prev = s;
    }
    if (!positions.empty() && positions.back() > shaft_length)
      throw Error("tooth position " + std::to_string(positions.back()) +
                  " exceeds shaft length " + std::to_string(shaft_length));
  }
};

// Full comb with teeth at every position 1..n.
inline ToothSet full_comb_teeth(int n) {
  if (n < 1) throw Error("comb needs >= 1 tooth");
  ToothSet t;
  t.positions.resize(n);
  std::iota(t.positions.begin(), t.positions.end(), 1);
  t.shaft_length = n;
  return t;
}

// Teeth at positions 1, gap+1, 2*gap+1, ...: uniform gaps of the given size.
inline ToothSet uniform_comb_teeth(int n_teeth, int gap) {
  if (n_teeth < 1) throw Error("comb needs >= 1 tooth");
  if (gap < 1) throw Error("gap must be >= 1");
  ToothSet t;
  for (int i = 0; i < n_teeth; ++i) t.positions.push_back(i * gap + 1);
  t.shaft_length = t.positions.back();
  return t;
}

// Comb tree plus the plane-coordinate -> vertex-id map.  Shaft vertices are
// (k,0) for 1 <= k <= shaft_length, teeth are (k,1) for k in positions.
struct Comb {
  RootedTree tree;
  ToothSet teeth;
  std::vector<int> shaft_ids;  // [k-1] -> id of (k,0)
  std::vector<int> tooth_ids;  // [k-1] -> id of (k,1), or -1

  int shaft(int k) const {
    if (k < 1 || k > static_cast<int>(shaft_ids.size()))
      throw Error("shaft position out of range");
    return shaft_ids[k - 1];
  }
  int tooth(int k) const {
    if (k < 1 || k > static_cast<int>(tooth_ids.size()) || tooth_ids[k - 1] < 0)
      throw Error("no tooth at position " + std::to_string(k));
    return tooth_ids[k - 1];
  }
};

// Builds the comb rooted at (1,0).  Ids are breadth-first with the tooth
// (k,1) preceding the shaft vertex (k+1,0), so the full comb gets
// (k,0) -> 2(k-1) and (k,1) -> 2k-1.
inline Comb build_comb(const ToothSet& teeth) {
  teeth.validate();
  const int len = teeth.shaft_length;
  std::vector<int> shaft_ids(len, -1), tooth_ids(len, -1);
  std::vector<bool> has_tooth(len + 1, false);
  for (int s : teeth.positions) has_tooth[s] = true;
  int next_id = 0;
  shaft_ids[0] = next_id++;
  for (int k = 1; k <= len; ++k) {
    if (has_tooth[k]) tooth_ids[k - 1] = next_id++;
    if (k + 1 <= len) shaft_ids[k] = next_id++;
  }
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < len; ++k)
    edges.emplace_back(shaft_ids[k - 1], shaft_ids[k]);
  for (int s : teeth.positions)
    edges.emplace_back(shaft_ids[s - 1], tooth_ids[s - 1]);
  return Comb{RootedTree::from_edges(next_id, 0, std::move(edges)), teeth,
              std::move(shaft_ids), std::move(tooth_ids)};
}

// Outcome of the spherical-symmetry check about the stored root.
struct SphericalSymmetry {
  bool symmetric = false;
  DegreeSequence seq;  // d_0..d_{r-1} when symmetric
  int depth = -1;      // first depth with a disagreement otherwise
  int v1 = -1, v2 = -1;
};

// Returns the downward degree sequence if every vertex at equal depth has
// the same child count; otherwise reports the first disagreeing pair.
// Symmetry is only checked about the stored root.
inline SphericalSymmetry downward_degree_sequence(const RootedTree& t) {
  const int r = t.radius();
  std::vector<std::vector<int>> by_depth(r + 1);
  for (int v = 0; v < t.vertex_count(); ++v) by_depth[t.depth(v)].push_back(v);
  SphericalSymmetry out;
  for (int k = 0; k <= r; ++k) {
    const auto& level = by_depth[k];
    int d0 = static_cast<int>(t.children(level.front()).size());
    for (int v : level) {
      int d = static_cast<int>(t.children(v).size());
      if (d != d0) {
        out.depth = k;
        out.v1 = level.front();
        out.v2 = v;
        return out;
      }
    }
    if (k < r) out.seq.push_back(d0);
  }
  out.symmetric = true;
  return out;
}

}  // namespace grt
