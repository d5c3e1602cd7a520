#pragma once

// Ten quadratic two-mode generators closing on sp(4, R) ~ o(3, 2), and a
// numerical closure check of their commutators.
//
// Compact (Hermitian):
//   J1 = (a1^+ a2 + a2^+ a1)/2        J2 = (a1^+ a2 - a2^+ a1)/2i
//   J3 = (a1^+ a1 - a2^+ a2)/2        S0 = (a1^+ a1 + a2^+ a2 + 1)/2
// Noncompact, stored anti-Hermitian as -i times the Hermitian form:
//   K1 = -(a1^+2 + a1^2 - a2^+2 - a2^2)/4     Q1 = -i(a1^+2 - a1^2 - a2^+2 + a2^2)/4
//   K2 =  i(a1^+2 - a1^2 + a2^+2 - a2^2)/4    Q2 = -(a1^+2 + a1^2 + a2^+2 + a2^2)/4
//   K3 =  (a1^+ a2^+ + a1 a2)/2               Q3 =  i(a1^+ a2^+ - a1 a2)/2
// so that exp(theta * stored Q3) = exp(theta (a1^+ a2^+ - a1 a2)/2) is the real
// two-mode squeeze.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "covosc/fock.hpp"

namespace covosc {

enum class Hermiticity { Hermitian, AntiHermitian };

enum class GeneratorRole {
    Rotation,  // J2, rotation in the x1-x2 plane
    Compact,   // J1, J3, S0
    Boost,     // K1, K2, K3, Q1, Q2, Q3
};

struct Generator {
    std::string name;
    FockOperator op;
    Hermiticity hermiticity;
    GeneratorRole role;

    /// The Hermitian form: op itself, or i * op when stored anti-Hermitian.
    FockOperator hermitized() const;
};

inline constexpr int kGeneratorCount = 10;
inline constexpr double kHermiticityTolerance = 1e-12;

class GeneratorSet {
  public:
    GeneratorSet(TruncatedFockSpace space, std::vector<Generator> generators);

    TruncatedFockSpace const& space() const { return space_; }
    std::span<Generator const> generators() const { return generators_; }
    Generator const& operator[](std::size_t k) const { return generators_[k]; }
    /// Throws InvalidArgument for an unknown name.
    Generator const& by_name(std::string const& name) const;

  private:
    TruncatedFockSpace space_;
    std::vector<Generator> generators_;
};

/// Order: J1, J2, J3, S0, K1, K2, K3, Q1, Q2, Q3. Each generator's declared
/// Hermiticity is verified to kHermiticityTolerance. Throws CutoffTooSmall for
/// n_max < 4.
GeneratorSet build_generators(TruncatedFockSpace const& space);

/// The single-mode su(1,1) triple on mode 1:
///   L0 = (a1^+ a1 + 1/2)/2, L1 = (a1^+2 + a1^2)/4, L2 = -i(a1^+2 - a1^2)/4.
std::vector<Generator> single_mode_triple(TruncatedFockSpace const& space);

struct PairClosure {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Complex> constants;  // [G_i, G_j] ~ sum_k constants[k] G_k
    double interior_residual = 0.0;  // Frobenius norm over interior columns
    double full_residual = 0.0;      // same coefficients, all columns
};

struct ClosureReport {
    int n_max = 0;
    int interior_margin = 2;
    std::vector<std::string> names;
    std::vector<PairClosure> pairs;  // i < j, lexicographic

    double max_interior_residual() const;
    double max_full_residual() const;
};

/// Fits every commutator [G_i, G_j], i < j, by least squares onto the span of
/// the given generators, using only the columns of interior states (both
/// occupations <= n_max - 2), where products of quadratics are exact. The same
/// coefficients are then applied on the full space to report the boundary
/// error. Throws CutoffTooSmall for n_max < 6.
ClosureReport fit_closure(std::span<Generator const> generators);

ClosureReport verify_algebra(GeneratorSet const& gens);

/// Largest |difference| between corresponding structure constants of two
/// reports over the same generator names. Throws InvalidArgument if the
/// reports do not describe the same pairs.
double max_constant_difference(ClosureReport const& a, ClosureReport const& b);

/// exp(eta * Q3)|0,0> on the truncated space, by scaled Taylor steps.
std::vector<Complex> squeezed_vacuum(GeneratorSet const& gens, Rapidity eta);

/// Amplitudes of |n, n>, n = 0..n_max, from a state vector.
std::vector<Complex> diagonal_amplitudes(TruncatedFockSpace const& space,
                                         std::span<Complex const> state);

}  // namespace covosc
