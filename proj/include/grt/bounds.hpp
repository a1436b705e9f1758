#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "grt/error.hpp"
#include "grt/tree.hpp"

namespace grt {

enum class BoundKind { lower, upper, exact };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "?";
}

// A closed-form bound on the generalized roundness, with provenance.
struct BoundReport {
  BoundKind kind = BoundKind::lower;
  double value = 0.0;
  std::string source;           // LowBnd, UppBnd, comb-lower, comb-upper, ...
  std::optional<int> argmin_k;  // minimizing k for UppBnd
  bool valid = true;
  std::string note;             // reason when a hypothesis fails
};

// Lower bound for any finite metric tree with m vertices and root radius r:
//   1 + ln(1 + 1/(2r (m-1) h(m))) / ln(2r),
// with h(m) = 1 - (floor(m/2)^-1 + ceil(m/2)^-1) / 2.
inline BoundReport generic_lower_bound(long long m, int r) {
  if (m < 3) throw Error("lower bound needs m >= 3 vertices");
  if (r < 1) throw Error("radius must be >= 1");
  const double lo = static_cast<double>(m / 2);
  const double hi = static_cast<double>((m + 1) / 2);
  const double h = 1.0 - 0.5 * (1.0 / lo + 1.0 / hi);
  const double denom = 2.0 * r * (static_cast<double>(m) - 1.0) * h;
  const double value = 1.0 + std::log1p(1.0 / denom) / std::log(2.0 * r);
  return {BoundKind::lower, value, "LowBnd", std::nullopt, true, ""};
}

// Convenience wrapper: radius taken as the eccentricity of the stored root.
inline BoundReport generic_lower_bound_for(const RootedTree& t) {
  return generic_lower_bound(t.vertex_count(), t.radius());
}

// Upper bound at one cut depth k for a spherically symmetric tree of radius
// n:  ln(2 + 2/(d_0...d_k - 1)) / ln(2 - 2k/n).
// Requires 1 <= k < n/2 and d_0...d_k > 1.
inline double sst_upper_bound_at_k(const DegreeSequence& seq, int n, int k) {
  if (n < 3) throw HypothesisError("radius must be >= 3");
  if (k < 1 || 2 * k >= n)
    throw HypothesisError("cut depth k = " + std::to_string(k) +
                          " outside 1 <= k < n/2 for n = " + std::to_string(n));
  if (static_cast<int>(seq.size()) < k + 1)
    throw HypothesisError("degree sequence has " + std::to_string(seq.size()) +
                          " entries, need " + std::to_string(k + 1));
  double product = 1.0;
  for (int i = 0; i <= k; ++i) product *= static_cast<double>(seq[i]);
  if (product <= 1.0)
    throw HypothesisError("d_0...d_k = 1: no branching above depth k");
  return std::log(2.0 + 2.0 / (product - 1.0)) /
         std::log(2.0 - 2.0 * k / static_cast<double>(n));
}

// Minimum of the cut bound over all admissible k.  When no k is admissible
// the trivial bound 2 applies and is flagged as such.
inline BoundReport sst_upper_bound(const DegreeSequence& seq, int n) {
  if (n < 3) throw Error("radius must be >= 3");
  BoundReport best{BoundKind::upper, 2.0, "UppBnd", std::nullopt, true,
                   "trivial: no admissible cut depth"};
  for (int k = 1; 2 * k < n && k < static_cast<int>(seq.size()); ++k) {
    double product = 1.0;
    for (int i = 0; i <= k; ++i) product *= static_cast<double>(seq[i]);
    if (product <= 1.0) continue;
    double v = sst_upper_bound_at_k(seq, n, k);
    if (!best.argmin_k || v < best.value) {
      best.value = v;
      best.argmin_k = k;
      best.note.clear();
    }
  }
  return best;
}

// Cut bound evaluated at k = floor(ln n); exhibits the limit gamma -> 1 for
// sequences with unbounded branching products.
inline double sst_bound_sequence(const DegreeSequence& seq, long long n) {
  if (n < 3) throw Error("radius must be >= 3");
  const int k = static_cast<int>(std::floor(std::log(static_cast<double>(n))));
  if (k < 1 || 2 * static_cast<long long>(k) >= n)
    throw HypothesisError("floor(ln n) = " + std::to_string(k) +
                          " is not an admissible cut depth for n = " +
                          std::to_string(n));
  if (static_cast<int>(seq.size()) < k + 1)
    throw HypothesisError("degree sequence has " + std::to_string(seq.size()) +
                          " entries, need " + std::to_string(k + 1));
  double product = 1.0;
  for (int i = 0; i <= k; ++i) product *= static_cast<double>(seq[i]);
  if (product <= 1.0)
    throw HypothesisError("d_0...d_k = 1: no branching above depth k");
  return std::log(2.0 + 2.0 / (product - 1.0)) /
         std::log(2.0 - 2.0 * k / static_cast<double>(n));
}

// Lower bound for the full comb with n teeth:
//   1 + ln(1 + 1/(2(n+2)(n-1))) / ln(n+2).
inline BoundReport comb_lower_bound(long long n) {
  if (n < 2) throw Error("need n >= 2");
  const double nn = static_cast<double>(n);
  const double value =
      1.0 + std::log1p(1.0 / (2.0 * (nn + 2.0) * (nn - 1.0))) / std::log(nn + 2.0);
  return {BoundKind::lower, value, "comb-lower", std::nullopt, true, ""};
}

// Strict upper bound for the full comb with n teeth:
//   p_n = ln(n+1) / (ln(n+1) - ln 2).
inline BoundReport comb_upper_bound(long long n) {
  if (n < 2) throw Error("need n >= 2");
  const double l = std::log(static_cast<double>(n) + 1.0);
  const double value = l / (l - std::log(2.0));
  return {BoundKind::upper, value, "comb-upper", std::nullopt, true, ""};
}

// Upper bound from n branch vertices on a radial path, the deepest at depth
// m:  ln(2 + 2/(n-1)) / ln(2 - 2/(m+1)).
inline double bifurcation_bound(int n, int m) {
  if (n < 2) throw Error("need n >= 2 branch vertices");
  if (m < n) throw Error("deepest branch vertex depth m must be >= n");
  return std::log(2.0 + 2.0 / (static_cast<double>(n) - 1.0)) /
         std::log(2.0 - 2.0 / (static_cast<double>(m) + 1.0));
}

// Exact generalized roundness of the star with n leaves:
//   1 + ln(1 + 1/(n-1)) / ln 2.
inline double star_gamma_exact(long long n) {
  if (n < 2) throw Error("need n >= 2 leaves");
  return 1.0 + std::log1p(1.0 / (static_cast<double>(n) - 1.0)) / std::log(2.0);
}

}  // namespace grt
