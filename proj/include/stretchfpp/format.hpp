#pragma once

#include <string>

namespace sfpp {

// 15 significant digits, shortest of fixed/scientific, independent of the
// global locale.
std::string format_double(double value);

}  // namespace sfpp
