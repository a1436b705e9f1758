#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grt/bounds.hpp"
#include "grt/error.hpp"
#include "grt/format.hpp"
#include "grt/metric.hpp"
#include "grt/simplex.hpp"
#include "grt/tree.hpp"

namespace grt {

enum class Provenance { thm21, thm33, comb, search };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::thm21: return "thm21";
    case Provenance::thm33: return "thm33";
    case Provenance::comb: return "comb";
    case Provenance::search: return "search";
  }
  return "?";
}

// A simplex with its gap at a fixed exponent.  The gap is always recomputed
// from the metric on construction; a negative gap certifies that the
// generalized roundness lies below p_star.
struct Witness {
  Simplex simplex;
  double p_star;
  double gap_value;
  Provenance provenance;

  bool certifying() const { return gap_value < 0.0; }
};

inline Witness make_witness(const DistanceMatrix& metric, Simplex simplex,
                            double p, Provenance provenance) {
  const double g = gap(metric, simplex, p);
  return Witness{std::move(simplex), p, g, provenance};
}

// One line: simplex text form plus exponent, gap and provenance.
inline std::string format_witness(const Witness& w) {
  return format_simplex(w.simplex) + " p=" + format_fixed(w.p_star, 9) +
         " gap=" + format_fixed(w.gap_value, 9) +
         " provenance=" + to_string(w.provenance);
}

// Leaf simplex of a spherically symmetric tree cut at depth k: one leaf per
// child of each depth-k vertex (smallest-id descendant, so the witness is
// reproducible), all b-points at the root.  Certifies the cut upper bound.
inline Simplex sst_witness(const RootedTree& tree, int k) {
  const SphericalSymmetry sym = downward_degree_sequence(tree);
  if (!sym.symmetric)
    throw HypothesisError("tree is not spherically symmetric about its root: "
                          "depth " + std::to_string(sym.depth) +
                          " mixes vertices " + std::to_string(sym.v1) +
                          " and " + std::to_string(sym.v2));
  const int n = tree.radius();
  if (n < 3) throw HypothesisError("radius must be >= 3");
  if (k < 1 || 2 * k >= n)
    throw HypothesisError("cut depth k = " + std::to_string(k) +
                          " outside 1 <= k < n/2 for n = " + std::to_string(n));
  long long q = 1;
  for (int i = 0; i <= k; ++i) q *= sym.seq[i];
  if (q <= 1)
    throw HypothesisError("d_0...d_k = 1: no branching above depth k");

  std::vector<int> a;
  a.reserve(static_cast<size_t>(q));
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.depth(v) != k) continue;
    for (int child : tree.children(v)) a.push_back(tree.smallest_leaf_below(child));
  }
  std::vector<int> b(a.size(), tree.root());
  return Simplex(std::move(a), std::move(b));
}

// Simplex from n branch vertices c_1..c_n on a radial path (the path
// vertices of degree >= 3, root excluded): a_j is the smallest-id
// descendant of an off-path child of c_j at depth m^2 + m, where m is the
// depth of c_n; all b-points sit at the root.  Certifies the bound
// ln(2 + 2/(n-1)) / ln(2 - 2/(m+1)).
inline Simplex bifurcation_witness(const RootedTree& tree,
                                   const std::vector<int>& radial_path, int n) {
  if (n < 2) throw Error("need n >= 2 branch vertices");
  if (radial_path.empty() || radial_path.front() != tree.root())
    throw Error("radial path must start at the root");
  for (size_t i = 1; i < radial_path.size(); ++i)
    if (tree.parent(radial_path[i]) != radial_path[i - 1])
      throw Error("radial path must follow child edges");

  std::vector<int> branch;  // c_1, c_2, ... in path order, root excluded
  for (size_t i = 1; i < radial_path.size(); ++i)
    if (tree.degree(radial_path[i]) >= 3) branch.push_back(radial_path[i]);
  if (static_cast<int>(branch.size()) < n)
    throw HypothesisError("no bifurcation: path has " +
                          std::to_string(branch.size()) +
                          " branch vertices, need " + std::to_string(n));

  const int m = tree.depth(branch[n - 1]);
  const int target_depth = m * m + m;
  std::vector<int> a;
  a.reserve(n);
  for (int j = 0; j < n; ++j) {
    const int c = branch[j];
    const int on_path = (tree.depth(c) < static_cast<int>(radial_path.size()) - 1)
                            ? radial_path[tree.depth(c) + 1]
                            : -1;
    int off_child = -1;
    for (int child : tree.children(c)) {
      if (child == on_path) continue;
      off_child = child;
      break;
    }
    if (off_child < 0)
      throw HypothesisError("branch vertex " + std::to_string(c) +
                            " has no off-path child");
    const int a_j = tree.smallest_descendant_at_depth(off_child, target_depth);
    if (a_j < 0)
      throw HypothesisError("tree too shallow: no descendant of vertex " +
                            std::to_string(off_child) + " at depth " +
                            std::to_string(target_depth) + " (m = " +
                            std::to_string(m) + ")");
    a.push_back(a_j);
  }
  std::vector<int> b(a.size(), tree.root());
  return Simplex(std::move(a), std::move(b));
}

// Tooth simplex of a comb, wrapped with its gap at p.
inline Witness comb_witness(const Comb& comb, int count, double p) {
  Simplex s = tooth_simplex(comb, count);
  return make_witness(path_metric(comb.tree), std::move(s), p,
                      Provenance::comb);
}

struct SearchConfig {
  uint64_t seed = 0;
  int restarts = 16;
  int max_moves = 2000;
  int q = 2;
  std::optional<int> pin_b;  // fix every b-point to this vertex

  void validate() const {
    if (restarts < 1 || max_moves < 1 || q < 2)
      throw Error("search parameters must be positive (q >= 2)");
  }
};

// Greedy local search for a negative-gap simplex: random restarts, one
// position replaced per move, accepted only on strict decrease.  The gap is
// recomputed in full after every move so a reported certificate can never
// drift from direct evaluation.  Deterministic for a fixed seed; restarts
// are reduced by lexicographically smallest (gap, encoding).
inline Witness search_witness(const DistanceMatrix& metric, double p,
                              const SearchConfig& cfg) {
  cfg.validate();
  const int size = metric.size();
  if (size < 3) throw Error("search needs a metric with >= 3 points");

  std::optional<Witness> best;
  std::string best_encoding;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::seed_seq sq{static_cast<uint32_t>(cfg.seed),
                     static_cast<uint32_t>(cfg.seed >> 32),
                     static_cast<uint32_t>(restart)};
    std::mt19937_64 eng(sq);
    // Raw engine draws keep the walk identical across standard libraries.
    auto draw = [&](int bound) { return static_cast<int>(eng() % bound); };

    std::vector<int> a(cfg.q), b(cfg.q);
    for (int& v : a) v = draw(size);
    if (cfg.pin_b) {
      if (*cfg.pin_b < 0 || *cfg.pin_b >= size)
        throw Error("pinned b vertex out of range");
      std::fill(b.begin(), b.end(), *cfg.pin_b);
    } else {
      for (int& v : b) v = draw(size);
    }

    double current = gap(metric, Simplex(a, b), p);
    for (int move = 0; move < cfg.max_moves; ++move) {
      const bool touch_a = cfg.pin_b ? true : draw(2) == 0;
      std::vector<int>& side = touch_a ? a : b;
      const int slot = draw(cfg.q);
      const int old = side[slot];
      side[slot] = draw(size);
      const double candidate = gap(metric, Simplex(a, b), p);
      if (candidate < current)
        current = candidate;
      else
        side[slot] = old;
    }

    Simplex s(a, b);
    std::string enc = format_simplex(s);
    if (!best || current < best->gap_value ||
        (current == best->gap_value && enc < best_encoding)) {
      best = Witness{std::move(s), p, current, Provenance::search};
      best_encoding = std::move(enc);
    }
  }
  return *best;
}

}  // namespace grt
