#include "covosc/desitter.hpp"

#include <Eigen/QR>
#include <cmath>

#include "covosc/error.hpp"

namespace covosc {

namespace {

constexpr Complex kI{0.0, 1.0};

using L = Ladder;

void check_hermiticity(Generator const& g) {
    ComplexMatrix const& m = g.op.matrix();
    double const err = g.hermiticity == Hermiticity::Hermitian ? (m - m.adjoint()).norm()
                                                               : (m + m.adjoint()).norm();
    if (!(err <= kHermiticityTolerance)) {
        throw Error("generator " + g.name + " violates its declared Hermiticity by " +
                    std::to_string(err));
    }
}

}  // namespace

FockOperator Generator::hermitized() const {
    return hermiticity == Hermiticity::Hermitian ? op : kI * op;
}

GeneratorSet::GeneratorSet(TruncatedFockSpace space, std::vector<Generator> generators)
    : space_(space), generators_(std::move(generators)) {
    for (auto const& g : generators_) {
        if (!(g.op.space() == space_)) {
            throw DimensionMismatch("generator " + g.name + " lives on a different space");
        }
        check_hermiticity(g);
    }
}

Generator const& GeneratorSet::by_name(std::string const& name) const {
    for (auto const& g : generators_) {
        if (g.name == name) {
            return g;
        }
    }
    throw InvalidArgument("no generator named " + name);
}

GeneratorSet build_generators(TruncatedFockSpace const& space) {
    if (space.n_max() < 4) {
        throw CutoffTooSmall("generator construction needs n_max >= 4, got " +
                             std::to_string(space.n_max()));
    }
    auto const p = [&](std::initializer_list<Ladder> ops) { return ladder_product(space, ops); };
    FockOperator const one = FockOperator::identity(space);
    FockOperator const n1 = p({L::A1Dag, L::A1});
    FockOperator const n2 = p({L::A2Dag, L::A2});
    FockOperator const up1 = p({L::A1Dag, L::A1Dag});
    FockOperator const dn1 = p({L::A1, L::A1});
    FockOperator const up2 = p({L::A2Dag, L::A2Dag});
    FockOperator const dn2 = p({L::A2, L::A2});
    FockOperator const up12 = p({L::A1Dag, L::A2Dag});
    FockOperator const dn12 = p({L::A1, L::A2});
    FockOperator const hop12 = p({L::A1Dag, L::A2});
    FockOperator const hop21 = p({L::A2Dag, L::A1});

    Complex const half = 0.5;
    Complex const quarter = 0.25;
    // Anti-Hermitian storage of the noncompact generators: -i * Hermitian form.
    auto const ah = [&](FockOperator const& hermitian) { return -kI * hermitian; };

    std::vector<Generator> g;
    g.push_back({"J1", half * (hop12 + hop21), Hermiticity::Hermitian, GeneratorRole::Compact});
    g.push_back({"J2", (half / kI) * (hop12 - hop21), Hermiticity::Hermitian,
                 GeneratorRole::Rotation});
    g.push_back({"J3", half * (n1 - n2), Hermiticity::Hermitian, GeneratorRole::Compact});
    g.push_back({"S0", half * (n1 + n2 + one), Hermiticity::Hermitian, GeneratorRole::Compact});
    g.push_back({"K1", ah(-quarter * (up1 + dn1 - up2 - dn2)), Hermiticity::AntiHermitian,
                 GeneratorRole::Boost});
    g.push_back({"K2", ah((quarter * kI) * (up1 - dn1 + up2 - dn2)), Hermiticity::AntiHermitian,
                 GeneratorRole::Boost});
    g.push_back({"K3", ah(half * (up12 + dn12)), Hermiticity::AntiHermitian,
                 GeneratorRole::Boost});
    g.push_back({"Q1", ah((-quarter * kI) * (up1 - dn1 - up2 + dn2)),
                 Hermiticity::AntiHermitian, GeneratorRole::Boost});
    g.push_back({"Q2", ah(-quarter * (up1 + dn1 + up2 + dn2)), Hermiticity::AntiHermitian,
                 GeneratorRole::Boost});
    g.push_back({"Q3", ah((half * kI) * (up12 - dn12)), Hermiticity::AntiHermitian,
                 GeneratorRole::Boost});
    return GeneratorSet(space, std::move(g));
}

std::vector<Generator> single_mode_triple(TruncatedFockSpace const& space) {
    auto const p = [&](std::initializer_list<Ladder> ops) { return ladder_product(space, ops); };
    FockOperator const one = FockOperator::identity(space);
    FockOperator const up = p({L::A1Dag, L::A1Dag});
    FockOperator const dn = p({L::A1, L::A1});
    std::vector<Generator> t;
    t.push_back({"L0", Complex(0.5) * (p({L::A1Dag, L::A1}) + Complex(0.5) * one),
                 Hermiticity::Hermitian, GeneratorRole::Compact});
    t.push_back({"L1", Complex(0.25) * (up + dn), Hermiticity::Hermitian, GeneratorRole::Boost});
    t.push_back({"L2", (-0.25 * kI) * (up - dn), Hermiticity::Hermitian, GeneratorRole::Boost});
    for (auto const& g : t) {
        check_hermiticity(g);
    }
    return t;
}

double ClosureReport::max_interior_residual() const {
    double worst = 0.0;
    for (auto const& p : pairs) {
        worst = std::max(worst, p.interior_residual);
    }
    return worst;
}

double ClosureReport::max_full_residual() const {
    double worst = 0.0;
    for (auto const& p : pairs) {
        worst = std::max(worst, p.full_residual);
    }
    return worst;
}

ClosureReport fit_closure(std::span<Generator const> generators) {
    if (generators.empty()) {
        throw InvalidArgument("closure fit needs at least one generator");
    }
    TruncatedFockSpace const space = generators.front().op.space();
    if (space.n_max() < 6) {
        throw CutoffTooSmall("closure check needs n_max >= 6, got " +
                             std::to_string(space.n_max()));
    }
    ClosureReport report;
    report.n_max = space.n_max();
    int const margin = report.interior_margin;
    int const dim = space.dimension();

    std::vector<int> interior;
    for (int k = 0; k < dim; ++k) {
        if (space.is_interior(k, margin)) {
            interior.push_back(k);
        }
    }
    auto const n_cols = static_cast<Eigen::Index>(interior.size());
    auto const n_rows = static_cast<Eigen::Index>(dim) * n_cols;
    auto const n_gen = static_cast<Eigen::Index>(generators.size());

    // Column-stacked interior columns of each operator.
    auto const interior_vector = [&](ComplexMatrix const& m) {
        Eigen::VectorXcd v(n_rows);
        for (Eigen::Index c = 0; c < n_cols; ++c) {
            v.segment(c * dim, dim) = m.col(interior[static_cast<std::size_t>(c)]);
        }
        return v;
    };

    Eigen::MatrixXcd design(n_rows, n_gen);
    for (Eigen::Index k = 0; k < n_gen; ++k) {
        design.col(k) = interior_vector(generators[static_cast<std::size_t>(k)].op.matrix());
        report.names.push_back(generators[static_cast<std::size_t>(k)].name);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> const qr(design);

    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            FockOperator const c = commutator(generators[i].op, generators[j].op);
            Eigen::VectorXcd const target = interior_vector(c.matrix());
            Eigen::VectorXcd const coef = qr.solve(target);

            PairClosure pc;
            pc.i = i;
            pc.j = j;
            pc.interior_residual = (design * coef - target).norm();
            ComplexMatrix fitted = ComplexMatrix::Zero(dim, dim);
            for (Eigen::Index k = 0; k < n_gen; ++k) {
                pc.constants.push_back(coef(k));
                fitted += coef(k) * generators[static_cast<std::size_t>(k)].op.matrix();
            }
            pc.full_residual = (c.matrix() - fitted).norm();
            report.pairs.push_back(std::move(pc));
        }
    }
    return report;
}

ClosureReport verify_algebra(GeneratorSet const& gens) { return fit_closure(gens.generators()); }

double max_constant_difference(ClosureReport const& a, ClosureReport const& b) {
    if (a.names != b.names || a.pairs.size() != b.pairs.size()) {
        throw InvalidArgument("closure reports cover different generators");
    }
    double worst = 0.0;
    for (std::size_t p = 0; p < a.pairs.size(); ++p) {
        for (std::size_t k = 0; k < a.pairs[p].constants.size(); ++k) {
            worst = std::max(worst, std::abs(a.pairs[p].constants[k] - b.pairs[p].constants[k]));
        }
    }
    return worst;
}

std::vector<Complex> squeezed_vacuum(GeneratorSet const& gens, Rapidity eta) {
    TruncatedFockSpace const& space = gens.space();
    ComplexMatrix const& q3 = gens.by_name("Q3").op.matrix();
    // Stored Q3 = (a1^+ a2^+ - a1 a2)/2 is real; step in real arithmetic.
    Eigen::MatrixXd const gen = q3.real();
    if (!(q3.imag().norm() <= kHermiticityTolerance)) {
        throw Error("squeeze generator is not real");
    }
    double const scale = std::abs(eta.value()) * gen.cwiseAbs().colwise().sum().maxCoeff();
    int const steps = std::max(1, static_cast<int>(std::ceil(scale)));
    double const dtheta = eta.value() / steps;

    Eigen::VectorXd state = Eigen::VectorXd::Zero(space.dimension());
    state(space.index(0, 0)) = 1.0;
    for (int s = 0; s < steps; ++s) {
        Eigen::VectorXd term = state;
        Eigen::VectorXd next = state;
        for (int k = 1; k < 60; ++k) {
            term = (dtheta / k) * (gen * term);
            next += term;
            if (term.norm() <= 1e-18 * next.norm()) {
                break;
            }
        }
        state = std::move(next);
    }
    std::vector<Complex> out(static_cast<std::size_t>(state.size()));
    for (Eigen::Index k = 0; k < state.size(); ++k) {
        out[static_cast<std::size_t>(k)] = state(k);
    }
    return out;
}

std::vector<Complex> diagonal_amplitudes(TruncatedFockSpace const& space,
                                         std::span<Complex const> state) {
    if (static_cast<int>(state.size()) != space.dimension()) {
        throw DimensionMismatch("state vector does not match the space dimension");
    }
    std::vector<Complex> out;
    for (int n = 0; n <= space.n_max(); ++n) {
        out.push_back(state[static_cast<std::size_t>(space.index(n, n))]);
    }
    return out;
}

}  // namespace covosc
