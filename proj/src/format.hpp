#ifndef DSEL_SRC_FORMAT_HPP
#define DSEL_SRC_FORMAT_HPP

#include <cstdio>
#include <string>

namespace dsel::detail {

/// Round-trippable decimal form.
inline std::string full_precision(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

}  // namespace dsel::detail

#endif  // DSEL_SRC_FORMAT_HPP
