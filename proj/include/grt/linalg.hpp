#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "grt/error.hpp"
#include "grt/metric.hpp"

namespace grt {

class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 1) throw Error("matrix must have positive size");
  }

  int size() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> a_;
};

// Entrywise p-th power of the metric: A_p[i,j] = d(x_i,x_j)^p.
inline SquareMatrix assemble_power_matrix(const DistanceMatrix& metric,
                                          double p) {
  if (!(p > 0.0)) throw Error("exponent must be positive");
  const int n = metric.size();
  SquareMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = metric(i, j);
      const double v = d == 0.0 ? 0.0 : std::pow(d, p);
      a.at(i, j) = v;
      a.at(j, i) = v;
    }
  return a;
}

// Determinant carried as sign and log magnitude.  A 127-point metric at
// p = 2 overflows a plain double product, the log form does not.
struct SignedLogDet {
  int sign = 0;  // -1, 0, +1
  double log_magnitude = -std::numeric_limits<double>::infinity();
};

// Row-pivoted triangular factorization.  The matrix is reported singular
// (sign 0) when a pivot falls below singular_threshold relative to the
// largest row sum of the input; distance matrices are far from positive
// definite and an unscaled cutoff misfires.
inline SignedLogDet signed_log_det(SquareMatrix m,
                                   double singular_threshold = 1e-12) {
  const int n = m.size();
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m.at(i, j));
    scale = std::max(scale, row);
  }
  if (scale == 0.0) return {0, -std::numeric_limits<double>::infinity()};
  const double pivot_floor = singular_threshold * scale;

  int sign = 1;
  double log_magnitude = 0.0;
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double pivot_mag = std::abs(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(m.at(r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag <= pivot_floor)
      return {0, -std::numeric_limits<double>::infinity()};
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot_row, j));
      sign = -sign;
    }
    const double pivot = m.at(col, col);
    if (pivot < 0.0) sign = -sign;
    log_magnitude += std::log(pivot_mag);
    for (int r = col + 1; r < n; ++r) {
      const double f = m.at(r, col) / pivot;
      if (f == 0.0) continue;
      for (int j = col + 1; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return {sign, log_magnitude};
}

// Determinant of the matrix bordered by an all-ones row and column with a
// zero corner:  [[A, 1], [1^T, 0]].  When A is invertible this equals
// -det(A) <A^-1 1, 1>, so its zeros detect the vanishing of the quadratic
// form without ever forming an explicit inverse.
inline SignedLogDet bordered_det(const SquareMatrix& m,
                                 double singular_threshold = 1e-12) {
  const int n = m.size();
  SquareMatrix b(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = m.at(i, j);
  for (int i = 0; i < n; ++i) {
    b.at(i, n) = 1.0;
    b.at(n, i) = 1.0;
  }
  b.at(n, n) = 0.0;
  return signed_log_det(std::move(b), singular_threshold);
}

}  // namespace grt
