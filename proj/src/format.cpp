#include "metgraph/format.hpp"

#include <cstdio>

namespace metgraph {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

} // namespace metgraph
