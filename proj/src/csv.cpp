#include "ionbounds/csv.hpp"

#include <cmath>
#include <cstdio>

namespace ionbounds {

std::string format_full_precision(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace ionbounds
