#include "impois/csv.hpp"

#include <cstdio>

namespace impois {

std::string format_g10(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace impois
