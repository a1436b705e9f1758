#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grt/bounds.hpp"
#include "grt/format.hpp"
#include "grt/gamma.hpp"
#include "grt/metric.hpp"
#include "grt/tree.hpp"

namespace grt {

struct CombTableRow {
  int n;
  double lower;
  double gamma_value;
  double upper;
};

struct BinaryTableRow {
  int m;
  double lower;
  double gamma_value;
  double upper_comb;
  std::optional<double> upper_sst;  // absent when no cut depth is admissible
};

inline std::vector<int> comb_table_params() {
  std::vector<int> params;
  for (int n = 2; n <= 10; ++n) params.push_back(n);
  for (int n = 15; n <= 50; n += 5) params.push_back(n);
  return params;
}

// Full-comb families C_n: closed-form bracket plus the numerical value.
inline std::vector<CombTableRow> comb_table(const ScanConfig& cfg = {}) {
  std::vector<CombTableRow> rows;
  for (int n : comb_table_params()) {
    const Comb comb = build_comb(full_comb_teeth(n));
    const GammaEstimate est = gamma(path_metric(comb.tree), cfg);
    rows.push_back({n, comb_lower_bound(n).value, est.midpoint(),
                    comb_upper_bound(n).value});
  }
  return rows;
}

// Complete binary trees B_m, m = 2..6.  The comb upper bound applies since
// B_m contains an isometric copy of C_m; the cut bound is absent at m = 2
// where no cut depth is admissible.
inline std::vector<BinaryTableRow> binary_table(const ScanConfig& cfg = {}) {
  std::vector<BinaryTableRow> rows;
  for (int m = 2; m <= 6; ++m) {
    const long long vertices = (1ll << (m + 1)) - 1;
    const RootedTree tree = build_complete_nary(2, m);
    const GammaEstimate est = gamma(path_metric(tree), cfg);
    BinaryTableRow row{m, generic_lower_bound(vertices, m).value,
                       est.midpoint(), comb_upper_bound(m).value,
                       std::nullopt};
    if (m >= 3) {
      const BoundReport upp = sst_upper_bound(DegreeSequence(m, 2), m);
      if (upp.argmin_k) row.upper_sst = upp.value;
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::string render_comb_csv(const std::vector<CombTableRow>& rows) {
  std::string out = "n,lower,gamma,upper\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + format_fixed(r.lower) + "," +
           format_fixed(r.gamma_value) + "," + format_fixed(r.upper) + "\n";
  return out;
}

inline std::string render_binary_csv(const std::vector<BinaryTableRow>& rows,
                                     bool paper_format = false) {
  const int decimals = paper_format ? 4 : 9;
  std::string out = "m,lower,gamma,upper_comb,upper_sst\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + "," + format_fixed(r.lower, decimals) + "," +
           format_fixed(r.gamma_value, decimals) + "," +
           format_fixed(r.upper_comb, decimals) + ",";
    if (r.upper_sst) out += format_fixed(*r.upper_sst, decimals);
    out += "\n";
  }
  return out;
}

}  // namespace grt
