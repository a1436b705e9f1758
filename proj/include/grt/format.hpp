#pragma once

#include <cstdio>
#include <string>

namespace grt {

// Fixed-point rendering; all table and report output uses 9 decimals so
// emitted files are byte-identical across runs.
inline std::string format_fixed(double value, int decimals = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace grt
