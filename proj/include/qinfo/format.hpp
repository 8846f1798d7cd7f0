#pragma once

#include <cstdio>
#include <string>

namespace qinfo {

// CSV numbers: scientific with 10 significant digits, byte-stable across runs
inline std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9e", v);
  return buf;
}

// angles in radians, plain notation with 9 decimal places
inline std::string fmt_phi(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

// human-readable display, 6 decimals
inline std::string fmt_human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

} // namespace qinfo
