#pragma once

#include <string>

namespace metgraph {

/// Decimal rendering with 12 significant digits; negative zero prints as 0.
std::string format_number(double value);

} // namespace metgraph
