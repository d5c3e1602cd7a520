#include "covosc/error.hpp"

namespace covosc {

DegenerateCoupling::DegenerateCoupling(double a, double c)
    : Error("degenerate coupling: |C| >= A (A=" + std::to_string(a) +
            ", C=" + std::to_string(c) + ")"),
      a_(a),
      c_(c) {}

}  // namespace covosc
