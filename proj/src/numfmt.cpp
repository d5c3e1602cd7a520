#include "covosc/numfmt.hpp"

#include <cstdio>

namespace covosc {

std::string format_double(double x) {
    char buf[32];
    int const n = std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace covosc
