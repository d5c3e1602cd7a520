#pragma once

#include <stdexcept>
#include <string>

namespace covosc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class RapidityOutOfRange : public Error {
  public:
    using Error::Error;
};

/// |C| >= A: the coupled potential is not positive definite.
class DegenerateCoupling : public Error {
  public:
    DegenerateCoupling(double a, double c);
    double a() const { return a_; }
    double c() const { return c_; }

  private:
    double a_;
    double c_;
};

/// Two quadrature orders disagree, or the order is below the accepted minimum.
class QuadratureUnderResolved : public Error {
  public:
    using Error::Error;
};

class OrderOverflow : public Error {
  public:
    using Error::Error;
};

class CutoffTooSmall : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

}  // namespace covosc
