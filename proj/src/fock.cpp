#include "covosc/fock.hpp"

#include <cmath>
#include <vector>

#include "covosc/error.hpp"

namespace covosc {

TruncatedFockSpace::TruncatedFockSpace(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
        throw CutoffTooSmall("Fock cutoff must be >= 1, got " + std::to_string(n_max));
    }
}

bool TruncatedFockSpace::is_interior(int flat, int margin) const {
    auto const [n1, n2] = occupations(flat);
    return n1 <= n_max_ - margin && n2 <= n_max_ - margin;
}

FockOperator::FockOperator(TruncatedFockSpace space, ComplexMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    if (matrix_.rows() != space_.dimension() || matrix_.cols() != space_.dimension()) {
        throw DimensionMismatch("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", space dimension is " +
                                std::to_string(space_.dimension()));
    }
}

FockOperator FockOperator::zero(TruncatedFockSpace space) {
    return {space, ComplexMatrix::Zero(space.dimension(), space.dimension())};
}

FockOperator FockOperator::identity(TruncatedFockSpace space) {
    return {space, ComplexMatrix::Identity(space.dimension(), space.dimension())};
}

FockOperator FockOperator::adjoint() const { return {space_, matrix_.adjoint()}; }

namespace {

void require_same_space(FockOperator const& a, FockOperator const& b) {
    if (!(a.space() == b.space())) {
        throw DimensionMismatch("operators act on spaces with cutoffs " +
                                std::to_string(a.space().n_max()) + " and " +
                                std::to_string(b.space().n_max()));
    }
}

}  // namespace

FockOperator operator+(FockOperator const& a, FockOperator const& b) {
    require_same_space(a, b);
    return {a.space_, a.matrix_ + b.matrix_};
}

FockOperator operator-(FockOperator const& a, FockOperator const& b) {
    require_same_space(a, b);
    return {a.space_, a.matrix_ - b.matrix_};
}

FockOperator operator*(FockOperator const& a, FockOperator const& b) {
    require_same_space(a, b);
    return {a.space_, a.matrix_ * b.matrix_};
}

FockOperator operator*(Complex s, FockOperator const& a) { return {a.space_, s * a.matrix_}; }

FockOperator ladder_product(TruncatedFockSpace const& space, std::initializer_list<Ladder> ops) {
    std::vector<Ladder> const seq(ops);
    int const dim = space.dimension();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        auto occ = space.occupations(col);
        double amp = 1.0;
        for (auto it = seq.rbegin(); it != seq.rend() && amp != 0.0; ++it) {
            int& n = (*it == Ladder::A1 || *it == Ladder::A1Dag) ? occ[0] : occ[1];
            bool const raise = (*it == Ladder::A1Dag || *it == Ladder::A2Dag);
            if (raise) {
                if (n == space.n_max()) {
                    amp = 0.0;
                } else {
                    amp *= std::sqrt(static_cast<double>(n + 1));
                    ++n;
                }
            } else {
                amp *= std::sqrt(static_cast<double>(n));
                --n;
            }
        }
        if (amp != 0.0) {
            m(space.index(occ[0], occ[1]), col) = amp;
        }
    }
    return {space, std::move(m)};
}

StepOperators step_operators(TruncatedFockSpace const& space) {
    if (space.n_max() < 2) {
        throw CutoffTooSmall("step operators need n_max >= 2");
    }
    FockOperator a1 = ladder_product(space, {Ladder::A1});
    FockOperator a2 = ladder_product(space, {Ladder::A2});
    FockOperator a1_dag = a1.adjoint();
    FockOperator a2_dag = a2.adjoint();
    return {std::move(a1), std::move(a1_dag), std::move(a2), std::move(a2_dag)};
}

FockOperator commutator(FockOperator const& a, FockOperator const& b) { return a * b - b * a; }

double frobenius_norm(FockOperator const& op) { return op.matrix().norm(); }

}  // namespace covosc
