#pragma once

#include <vector>

namespace covosc {

inline constexpr int kDefaultNMax = 64;

/// Orthonormal oscillator eigenfunction
///   phi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) exp(-x^2/2),
/// evaluated with the three-term recurrence on phi_n itself.
/// Throws OrderOverflow if n > n_limit or n < 0.
double hermite_fn(int n, double x, int n_limit = kDefaultNMax);

/// phi_0(x), ..., phi_n_max(x) in one recurrence pass.
std::vector<double> hermite_fns(int n_max, double x, int n_limit = kDefaultNMax);

}  // namespace covosc
