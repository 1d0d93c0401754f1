#pragma once

#include <string>

namespace impois {

// Shortest decimal form with 10 significant digits ("%.10g").
std::string format_g10(double v);

}  // namespace impois
