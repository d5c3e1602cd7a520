#pragma once

#include <string>

namespace covosc {

/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_double(double x);

}  // namespace covosc
