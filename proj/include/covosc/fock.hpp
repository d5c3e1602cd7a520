#pragma once

// Two-mode oscillator algebra on the truncated Fock space
// {|n1, n2> : 0 <= n1, n2 <= n_max}, flat index n1 (n_max + 1) + n2.

#include <Eigen/Core>
#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "covosc/lightcone.hpp"

namespace covosc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

class TruncatedFockSpace {
  public:
    /// Throws CutoffTooSmall for n_max < 1.
    explicit TruncatedFockSpace(int n_max);

    int n_max() const { return n_max_; }
    int dimension() const { return (n_max_ + 1) * (n_max_ + 1); }
    int index(int n1, int n2) const { return n1 * (n_max_ + 1) + n2; }
    std::array<int, 2> occupations(int flat) const {
        return {flat / (n_max_ + 1), flat % (n_max_ + 1)};
    }
    /// Both occupations at most n_max - margin.
    bool is_interior(int flat, int margin = 2) const;

    bool operator==(TruncatedFockSpace const&) const = default;

  private:
    int n_max_;
};

/// Dense operator on a TruncatedFockSpace. Arithmetic between operators on
/// different spaces throws DimensionMismatch.
class FockOperator {
  public:
    FockOperator(TruncatedFockSpace space, ComplexMatrix matrix);
    static FockOperator zero(TruncatedFockSpace space);
    static FockOperator identity(TruncatedFockSpace space);

    TruncatedFockSpace const& space() const { return space_; }
    ComplexMatrix const& matrix() const { return matrix_; }
    Complex operator()(int row, int col) const { return matrix_(row, col); }

    FockOperator adjoint() const;

    friend FockOperator operator+(FockOperator const& a, FockOperator const& b);
    friend FockOperator operator-(FockOperator const& a, FockOperator const& b);
    friend FockOperator operator*(FockOperator const& a, FockOperator const& b);
    friend FockOperator operator*(Complex s, FockOperator const& a);

  private:
    TruncatedFockSpace space_;
    ComplexMatrix matrix_;
};

enum class Ladder { A1, A1Dag, A2, A2Dag };

/// Matrix of the operator product ops[0] ops[1] ... (rightmost acts first),
/// assembled state by state. Raising past n_max gives zero, so normal-ordered
/// products are exact compressions of the infinite-dimensional operators.
FockOperator ladder_product(TruncatedFockSpace const& space, std::initializer_list<Ladder> ops);

struct StepOperators {
    FockOperator a1;
    FockOperator a1_dag;
    FockOperator a2;
    FockOperator a2_dag;
};

/// a|n> = sqrt(n)|n-1>, a^dag = a^H exactly. Throws CutoffTooSmall for n_max < 2.
StepOperators step_operators(TruncatedFockSpace const& space);

/// ab - ba; DimensionMismatch if the spaces differ.
FockOperator commutator(FockOperator const& a, FockOperator const& b);

double frobenius_norm(FockOperator const& op);

}  // namespace covosc
