#pragma once

#include <cstdio>
#include <string>

namespace npt {

// Shortest round-trippable decimal form; keeps emitted files deterministic.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace npt
