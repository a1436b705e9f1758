#pragma once

#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grt/error.hpp"
#include "grt/metric.hpp"
#include "grt/tree.hpp"

namespace grt {

// Double configuration (a_1..a_q; b_1..b_q) of vertex ids.  Points need not
// be distinct; q >= 2.
struct Simplex {
  std::vector<int> a;
  std::vector<int> b;

  Simplex(std::vector<int> a_points, std::vector<int> b_points)
      : a(std::move(a_points)), b(std::move(b_points)) {
    if (a.size() != b.size()) throw Error("simplex sides must have equal size");
    if (a.size() < 2) throw Error("simplex needs q >= 2");
  }

  int q() const { return static_cast<int>(a.size()); }
};

namespace detail {

inline void check_ids(const DistanceMatrix& metric, const Simplex& s) {
  for (int v : s.a)
    if (v < 0 || v >= metric.size()) throw Error("simplex id out of range");
  for (int v : s.b)
    if (v < 0 || v >= metric.size()) throw Error("simplex id out of range");
}

}  // namespace detail

// Simplex gap: cross terms minus within-side terms,
//   sum_{i,j} d(a_i,b_j)^p - sum_{i<j} { d(a_i,a_j)^p + d(b_i,b_j)^p }.
// A negative value at exponent p certifies that the generalized roundness
// of the metric is below p.
//
// Terms are collected into one integer coefficient per distinct distance
// and summed in ascending distance order.  The order is canonical, and a
// configuration whose cross and within distance multisets coincide (b a
// permutation of a, say) evaluates to exactly zero instead of an
// order-of-accumulation ulp that could flip the certificate sign.
inline double gap(const DistanceMatrix& metric, const Simplex& s, double p) {
  if (!(p > 0.0)) throw Error("exponent must be positive");
  detail::check_ids(metric, s);
  const int q = s.q();
  std::map<double, long long> coefficient;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) coefficient[metric(s.a[i], s.b[j])] += 1;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      coefficient[metric(s.a[i], s.a[j])] -= 1;
      coefficient[metric(s.b[i], s.b[j])] -= 1;
    }
  double total = 0.0;
  for (const auto& [d, c] : coefficient) {
    if (d == 0.0 || c == 0) continue;  // 0^p = 0
    total += static_cast<double>(c) * std::pow(d, p);
  }
  return total;
}

struct GapCurve {
  std::vector<double> p_grid;
  std::vector<double> values;
};

inline GapCurve gap_curve(const DistanceMatrix& metric, const Simplex& s,
                          double p_lo, double p_hi, double step) {
  if (!(0.0 < p_lo && p_lo < p_hi)) throw Error("need 0 < p_lo < p_hi");
  if (!(step > 0.0)) throw Error("step must be positive");
  GapCurve curve;
  for (long long i = 0;; ++i) {
    double p = p_lo + static_cast<double>(i) * step;
    if (p > p_hi + step * 1e-9) break;
    curve.p_grid.push_back(p);
    curve.values.push_back(gap(metric, s, p));
  }
  return curve;
}

// Gap of the canonical tooth simplex of the full comb with n teeth:
//   1 + n 2^p - (n+1)^p.
inline double comb_gap_closed_form(long long n, double p) {
  if (n < 2) throw Error("need n >= 2");
  if (!(p > 0.0)) throw Error("exponent must be positive");
  const double nn = static_cast<double>(n);
  return 1.0 + nn * std::pow(2.0, p) - std::pow(nn + 1.0, p);
}

// Gap of the tooth simplex of the comb with uniform tooth spacing k:
//   n - sum_{i=1}^{n-1} (n-i) { (ik)^p + (ik+2)^p - 2(ik+1)^p }.
// Any positive real spacing is admitted.
inline double uniform_comb_gap_closed_form(long long n, double k, double p) {
  if (n < 2) throw Error("need n >= 2");
  if (!(k > 0.0)) throw Error("spacing must be positive");
  if (!(p > 0.0)) throw Error("exponent must be positive");
  double sum = 0.0;
  for (long long i = 1; i < n; ++i) {
    const double x = static_cast<double>(i) * k;
    const double brace =
        std::pow(x, p) + std::pow(x + 2.0, p) - 2.0 * std::pow(x + 1.0, p);
    sum += static_cast<double>(n - i) * brace;
  }
  return static_cast<double>(n) - sum;
}

// Simplex over the first n teeth of a comb: a_i at the shaft below tooth i,
// b_i at the tooth itself.
inline Simplex tooth_simplex(const Comb& comb, int count) {
  if (count < 2) throw Error("need >= 2 teeth in the simplex");
  if (count > static_cast<int>(comb.teeth.positions.size()))
    throw HypothesisError("comb has only " +
                          std::to_string(comb.teeth.positions.size()) +
                          " teeth, " + std::to_string(count) + " requested");
  std::vector<int> a, b;
  a.reserve(count);
  b.reserve(count);
  for (int i = 0; i < count; ++i) {
    int s = comb.teeth.positions[i];
    a.push_back(comb.shaft(s));
    b.push_back(comb.tooth(s));
  }
  return Simplex(std::move(a), std::move(b));
}

// Smallest n >= 2 whose uniform-comb closed-form gap is negative at the
// given spacing and exponent.  The running prefix sum makes each step O(1).
inline long long min_n_negative(double k, double p,
                                long long cap = 10'000'000) {
  if (!(p > 1.0 && p <= 2.0)) throw Error("exponent must lie in (1, 2]");
  if (!(k > 0.0)) throw Error("spacing must be positive");
  if (cap < 2) throw Error("cap must be >= 2");
  auto brace = [&](long long i) {
    const double x = static_cast<double>(i) * k;
    return std::pow(x, p) + std::pow(x + 2.0, p) - 2.0 * std::pow(x + 1.0, p);
  };
  // gap(n+1) = gap(n) + 1 - sum_{i=1}^{n} brace(i)
  double gap_n = 2.0 - brace(1);
  double prefix = brace(1);
  for (long long n = 2; n <= cap; ++n) {
    if (gap_n < 0.0) return n;
    prefix += brace(n);
    gap_n += 1.0 - prefix;
  }
  throw HypothesisError("no negative gap found up to n = " +
                        std::to_string(cap) +
                        "; exponent too close to 1 for this cap");
}

// Text form `a:<id>,<id>,...;b:<id>,...` (no spaces).
inline std::string format_simplex(const Simplex& s) {
  std::string out = "a:";
  for (int i = 0; i < s.q(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.a[i]);
  }
  out += ";b:";
  for (int i = 0; i < s.q(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.b[i]);
  }
  return out;
}

inline Simplex parse_simplex(std::string_view text) {
  auto fail = []() -> Error {
    return Error("malformed simplex; expected a:<id>,...;b:<id>,...");
  };
  if (text.substr(0, 2) != "a:") throw fail();
  size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.substr(semi + 1, 2) != "b:")
    throw fail();
  auto parse_ids = [&](std::string_view part) {
    std::vector<int> ids;
    while (!part.empty()) {
      size_t comma = part.find(',');
      std::string_view tok = part.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
        throw fail();
      ids.push_back(v);
      if (comma == std::string_view::npos) break;
      part.remove_prefix(comma + 1);
    }
    if (ids.empty()) throw fail();
    return ids;
  };
  std::vector<int> a = parse_ids(text.substr(2, semi - 2));
  std::vector<int> b = parse_ids(text.substr(semi + 3));
  return Simplex(std::move(a), std::move(b));
}

}  // namespace grt
