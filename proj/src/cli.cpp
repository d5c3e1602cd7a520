#include "covosc/cli.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "covosc/config.hpp"
#include "covosc/coupled_osc.hpp"
#include "covosc/density.hpp"
#include "covosc/desitter.hpp"
#include "covosc/error.hpp"
#include "covosc/expansion.hpp"
#include "covosc/numfmt.hpp"
#include "covosc/residual.hpp"
#include "covosc/wavefunction.hpp"

namespace covosc::cli {

namespace {

using ojson = nlohmann::ordered_json;

inline constexpr double kClosureTolerance = 1e-10;
inline constexpr double kStabilityTolerance = 1e-8;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ToleranceFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Flags as given on the command line; unset ones leave the merged config alone.
struct Flags {
    std::optional<std::string> config_path;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<double> eta;
    std::optional<double> eta_max;
    std::vector<std::string> points;
    std::optional<double> z_min, z_max, t_min, t_max;
    std::optional<int> n_z, n_t;
    std::optional<int> quad_order;
    std::optional<int> n_max;
    std::optional<int> fock_n_max;
    std::optional<int> fock_n_max_check;
    std::optional<double> h;
    std::optional<std::string> signature;
    std::optional<double> m, a, c;
};

template <typename T>
void overlay(T& dst, std::optional<T> const& src) {
    if (src) {
        dst = *src;
    }
}

SpaceTimePoint parse_point(std::string const& text) {
    auto const comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError("point must be 'z,t', got '" + text + "'");
    }
    auto const number = [&](std::string const& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (std::exception const&) {
            throw UsageError("point must be 'z,t', got '" + text + "'");
        }
        if (pos != s.size() || !std::isfinite(v)) {
            throw UsageError("point must be 'z,t', got '" + text + "'");
        }
        return v;
    };
    return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

RunConfig merge(Flags const& f) {
    RunConfig cfg;
    if (f.config_path) {
        std::ifstream in(*f.config_path);
        if (!in) {
            throw IoError("cannot read config file " + *f.config_path);
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (nlohmann::json::exception const& e) {
            throw ConfigError("config file " + *f.config_path + ": " + e.what());
        }
        apply_config_json(cfg, j);
    }
    overlay(cfg.out, f.out);
    overlay(cfg.format, f.format);
    overlay(cfg.eta, f.eta);
    overlay(cfg.eta_max, f.eta_max);
    overlay(cfg.grid.z_min, f.z_min);
    overlay(cfg.grid.z_max, f.z_max);
    overlay(cfg.grid.t_min, f.t_min);
    overlay(cfg.grid.t_max, f.t_max);
    overlay(cfg.grid.n_z, f.n_z);
    overlay(cfg.grid.n_t, f.n_t);
    overlay(cfg.quad_order, f.quad_order);
    overlay(cfg.n_max, f.n_max);
    overlay(cfg.fock_n_max, f.fock_n_max);
    overlay(cfg.fock_n_max_check, f.fock_n_max_check);
    overlay(cfg.h, f.h);
    overlay(cfg.m, f.m);
    overlay(cfg.a, f.a);
    overlay(cfg.c, f.c);
    if (f.signature) {
        cfg.signature = parse_signature(*f.signature);
    }
    if (!f.points.empty()) {
        cfg.points.clear();
        for (auto const& p : f.points) {
            cfg.points.push_back(parse_point(p));
        }
    }
    try {
        cfg.validate();
    } catch (InvalidArgument const& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void write_file(std::string const& path, std::string const& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw IoError("cannot open " + path + " for writing");
    }
    os << content;
    os.flush();
    if (!os) {
        throw IoError("failed writing " + path);
    }
}

ojson report_header(std::string const& command, RunConfig const& cfg) {
    ojson j;
    j["command"] = command;
    j["config"] = config_to_json(cfg);
    return j;
}

// Each command returns the text for stdout; files are written before return.
std::string cmd_boost(RunConfig const& cfg) {
    if (cfg.points.empty()) {
        throw UsageError("boost needs at least one --point z,t");
    }
    Rapidity const eta(cfg.eta, cfg.eta_max);
    struct Row {
        SpaceTimePoint p, pb;
        LightConePoint q, qb;
    };
    std::vector<Row> rows;
    for (auto const& p : cfg.points) {
        LightConePoint const q = to_lightcone(p);
        rows.push_back({p, boost_point(eta, p), q, boost_lightcone(eta, q)});
    }
    std::string text;
    if (cfg.format == "json") {
        ojson j = report_header("boost", cfg);
        auto arr = ojson::array();
        for (auto const& r : rows) {
            ojson e;
            e["z"] = r.p.z;
            e["t"] = r.p.t;
            e["z_boosted"] = r.pb.z;
            e["t_boosted"] = r.pb.t;
            e["u"] = r.q.u;
            e["v"] = r.q.v;
            e["u_boosted"] = r.qb.u;
            e["v_boosted"] = r.qb.v;
            e["uv"] = lightcone_product(r.q);
            e["uv_boosted"] = lightcone_product(r.qb);
            arr.push_back(std::move(e));
        }
        j["results"] = std::move(arr);
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "# eta=" << format_double(eta.value()) << '\n';
        os << "z,t,z_boosted,t_boosted,u,v,u_boosted,v_boosted,uv,uv_boosted\n";
        for (auto const& r : rows) {
            double const vals[] = {r.p.z,  r.p.t,  r.pb.z, r.pb.t, r.q.u, r.q.v,
                                   r.qb.u, r.qb.v, lightcone_product(r.q),
                                   lightcone_product(r.qb)};
            for (std::size_t k = 0; k < std::size(vals); ++k) {
                os << (k ? "," : "") << format_double(vals[k]);
            }
            os << '\n';
        }
        text = os.str();
    }
    if (!cfg.out.empty()) {
        write_file(cfg.out, text);
    }
    return text;
}

std::string cmd_density(RunConfig const& cfg) {
    if (cfg.out.empty()) {
        throw UsageError("density needs --out <path>");
    }
    Rapidity const eta(cfg.eta, cfg.eta_max);
    DensityGrid const grid = density_grid(eta, cfg.grid);
    std::string content;
    if (cfg.format == "json") {
        content = density_json(grid);
    } else {
        std::ostringstream os;
        write_density_csv(os, grid);
        content = os.str();
    }
    write_file(cfg.out, content);

    GridMoments const m = grid_moments(grid);
    ojson j = report_header("density", cfg);
    ojson r;
    r["peak"] = m.peak;
    r["mass"] = m.mass;
    r["mean_z"] = m.mean_z;
    r["mean_t"] = m.mean_t;
    r["var_z"] = m.var_z;
    r["var_t"] = m.var_t;
    r["cov_zt"] = m.cov_zt;
    r["major_variance"] = m.major_variance;
    r["minor_variance"] = m.minor_variance;
    r["axes_ratio"] = m.axes_ratio();
    r["axes_ratio_expected"] = std::exp(std::abs(eta.value()));
    r["major_axis_angle"] = m.major_axis_angle;
    j["results"] = std::move(r);
    j["output"] = cfg.out;
    return j.dump(2) + "\n";
}

std::vector<SpaceTimePoint> residual_points(RunConfig const& cfg) {
    if (!cfg.points.empty()) {
        return cfg.points;
    }
    // 9 x 9 lattice on [-2, 2]^2.
    std::vector<SpaceTimePoint> pts;
    for (int i = -4; i <= 4; ++i) {
        for (int k = -4; k <= 4; ++k) {
            pts.push_back({0.5 * i, 0.5 * k});
        }
    }
    return pts;
}

std::string cmd_residual(RunConfig const& cfg) {
    Rapidity const eta(cfg.eta, cfg.eta_max);
    auto const pts = residual_points(cfg);
    ResidualResult const r = residual_eq13(eta, pts, cfg.h, cfg.signature);

    // Four-dimensional check on (z/2, t/2, z, t).
    std::vector<FourVector> pts4;
    for (auto const& p : pts) {
        pts4.push_back({0.5 * p.z, 0.5 * p.t, p.z, p.t});
    }
    ResidualResult const r4 = residual_eq13_4d(pts4, cfg.h, cfg.signature);

    ojson j = report_header("residual", cfg);
    ojson res;
    res["n_points"] = pts.size();
    res["lambda"] = r.lambda;
    res["max_residual"] = r.max_residual;
    if (cfg.h / 2.0 >= kMinStep) {
        ResidualResult const half = residual_eq13(eta, pts, cfg.h / 2.0, cfg.signature);
        res["lambda_half_step"] = half.lambda;
        res["max_residual_half_step"] = half.max_residual;
        res["halving_ratio"] = r.max_residual / half.max_residual;
    }
    res["lambda_4d"] = r4.lambda;
    res["lambda_4d_expected"] = cfg.signature == Signature::SpacePositive ? 1.0 : -1.0;
    res["max_residual_4d"] = r4.max_residual;
    j["results"] = std::move(res);
    j["tolerances"] = {{"residual_tolerance", cfg.residual_tolerance},
                       {"achieved_max_residual", std::max(r.max_residual, r4.max_residual)}};
    if (r.max_residual > cfg.residual_tolerance || r4.max_residual > cfg.residual_tolerance) {
        throw ToleranceFailure("residual " + format_double(std::max(r.max_residual, r4.max_residual)) +
                               " exceeds tolerance " + format_double(cfg.residual_tolerance));
    }
    std::string text = j.dump(2) + "\n";
    if (!cfg.out.empty()) {
        write_file(cfg.out, text);
    }
    return text;
}

std::string cmd_expand(RunConfig const& cfg) {
    Rapidity const eta(cfg.eta, cfg.eta_max);
    ExpansionCoefficients const e =
        squeeze_expansion(eta, cfg.n_max, QuadratureRule::gauss_hermite(cfg.quad_order),
                          cfg.n_limit, cfg.min_quad_order);
    auto const ratios = coefficient_ratios(e.c, cfg.ratio_floor);
    double const sum_sq = e.sum_of_squares();

    ojson j = report_header("expand", cfg);
    ojson r;
    r["c"] = e.c;
    r["ratios"] = ratios;
    r["ratio_spread"] = ratio_spread(ratios);
    r["tanh_half_eta"] = std::tanh(eta.value() / 2.0);
    r["sum_of_squares"] = sum_sq;
    r["completeness_deficit"] = 1.0 - sum_sq;
    j["results"] = std::move(r);
    j["tolerances"] = {{"order_agreement_tolerance", kOrderAgreementTolerance},
                       {"achieved_order_change", e.max_order_change},
                       {"off_diagonal_tolerance", kOffDiagonalTolerance},
                       {"achieved_max_off_diagonal", e.max_off_diagonal},
                       {"quad_order", e.order},
                       {"check_order", 2 * e.order}};
    std::string text = j.dump(2) + "\n";
    if (!cfg.out.empty()) {
        write_file(cfg.out, text);
    }
    return text;
}

std::string cmd_modes(RunConfig const& cfg) {
    CoupledOscillatorSystem const sys{cfg.m, cfg.a, cfg.c};
    NormalModeData const d = normal_modes(sys);

    Eigen::Matrix2d pot;
    pot << sys.a, sys.c, sys.c, sys.a;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> const eig(pot);
    Eigen::Vector2d const ev = eig.eigenvalues();

    ojson j = report_header("modes", cfg);
    ojson r;
    r["K"] = d.k;
    r["eta"] = d.eta;
    r["exp_2eta"] = std::exp(2.0 * d.eta);
    r["omega_plus"] = d.omega_plus;
    r["omega_minus"] = d.omega_minus;
    r["potential_eigenvalues"] = {ev(0), ev(1)};
    r["K_from_eigenvalues"] = std::sqrt(ev(0) * ev(1));
    j["results"] = std::move(r);
    std::string text = j.dump(2) + "\n";
    if (!cfg.out.empty()) {
        write_file(cfg.out, text);
    }
    return text;
}

ojson closure_json(ClosureReport const& rep) {
    ojson pairs = ojson::array();
    for (auto const& p : rep.pairs) {
        ojson e;
        e["pair"] = {rep.names[p.i], rep.names[p.j]};
        e["interior_residual"] = p.interior_residual;
        e["full_residual"] = p.full_residual;
        ojson re = ojson::array();
        ojson im = ojson::array();
        for (auto const& c : p.constants) {
            re.push_back(c.real());
            im.push_back(c.imag());
        }
        e["constants_re"] = std::move(re);
        e["constants_im"] = std::move(im);
        pairs.push_back(std::move(e));
    }
    return pairs;
}

std::string cmd_algebra_check(RunConfig const& cfg) {
    TruncatedFockSpace const space(cfg.fock_n_max);
    GeneratorSet const gens = build_generators(space);
    ClosureReport const rep = verify_algebra(gens);

    ojson j = report_header("algebra-check", cfg);
    j["n_max"] = rep.n_max;
    j["dimension"] = space.dimension();
    j["interior_margin"] = rep.interior_margin;
    ojson g = ojson::array();
    for (auto const& gen : gens.generators()) {
        g.push_back({{"name", gen.name},
                     {"hermiticity", gen.hermiticity == Hermiticity::Hermitian ? "hermitian"
                                                                               : "anti-hermitian"},
                     {"role", gen.role == GeneratorRole::Rotation  ? "rotation"
                              : gen.role == GeneratorRole::Compact ? "compact"
                                                                   : "boost"}});
    }
    j["generators"] = std::move(g);
    j["pairs"] = closure_json(rep);
    j["max_interior_residual"] = rep.max_interior_residual();
    j["max_full_residual"] = rep.max_full_residual();
    double stability = 0.0;
    if (cfg.fock_n_max_check > 0) {
        ClosureReport const check =
            verify_algebra(build_generators(TruncatedFockSpace(cfg.fock_n_max_check)));
        stability = max_constant_difference(rep, check);
        j["check_n_max"] = check.n_max;
        j["check_max_interior_residual"] = check.max_interior_residual();
        j["max_constant_difference"] = stability;
    }
    j["tolerances"] = {{"closure_tolerance", kClosureTolerance},
                       {"stability_tolerance", kStabilityTolerance}};
    if (rep.max_interior_residual() > kClosureTolerance) {
        throw ToleranceFailure("interior closure residual " +
                               format_double(rep.max_interior_residual()) + " exceeds tolerance");
    }
    if (stability > kStabilityTolerance) {
        throw ToleranceFailure("structure constants differ between cutoffs by " +
                               format_double(stability));
    }
    std::string text = j.dump(2) + "\n";
    if (!cfg.out.empty()) {
        write_file(cfg.out, text);
    }
    return text;
}

void add_shared(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config_path, "JSON config file (flags override it)");
    sub->add_option("--out", f.out, "output path");
    sub->add_option("--format", f.format, "csv or json");
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covariant harmonic oscillator toolkit"};
    app.require_subcommand(1);
    Flags f;

    auto* boost = app.add_subcommand("boost", "boost (z,t) points; print light-cone invariants");
    add_shared(boost, f);
    boost->add_option("--eta", f.eta, "rapidity");
    boost->add_option("--eta-max", f.eta_max, "rapidity bound");
    boost->add_option("--point", f.points, "point as z,t (repeatable)");

    auto* density = app.add_subcommand("density", "write |psi_eta|^2 on a (z,t) grid");
    add_shared(density, f);
    density->add_option("--eta", f.eta, "rapidity");
    density->add_option("--eta-max", f.eta_max, "rapidity bound");
    density->add_option("--z-min", f.z_min);
    density->add_option("--z-max", f.z_max);
    density->add_option("--t-min", f.t_min);
    density->add_option("--t-max", f.t_max);
    density->add_option("--nz", f.n_z, "grid points along z");
    density->add_option("--nt", f.n_t, "grid points along t");

    auto* residual = app.add_subcommand("residual", "finite-difference oscillator-equation residual");
    // --h is the step size, so help is long-form only here.
    residual->set_help_flag("--help", "Print this help message and exit");
    add_shared(residual, f);
    residual->add_option("--eta", f.eta, "rapidity");
    residual->add_option("--eta-max", f.eta_max, "rapidity bound");
    residual->add_option("--h", f.h, "finite-difference step in [1e-4, 1e-2]");
    residual->add_option("--point", f.points, "point as z,t (repeatable)");
    residual->add_option("--signature", f.signature, "space-positive or time-positive");

    auto* expand = app.add_subcommand("expand", "squeeze expansion coefficients");
    add_shared(expand, f);
    expand->add_option("--eta", f.eta, "rapidity");
    expand->add_option("--eta-max", f.eta_max, "rapidity bound");
    expand->add_option("--nmax", f.n_max, "highest Hermite order");
    expand->add_option("--order", f.quad_order, "Gauss-Hermite order");

    auto* modes = app.add_subcommand("modes", "coupled-oscillator normal modes");
    add_shared(modes, f);
    modes->add_option("--m", f.m, "mass");
    modes->add_option("--A", f.a, "spring constant");
    modes->add_option("--C", f.c, "coupling constant");

    auto* algebra = app.add_subcommand("algebra-check", "commutator closure of the ten generators");
    add_shared(algebra, f);
    algebra->add_option("--nmax", f.fock_n_max, "Fock cutoff per mode");
    algebra->add_option("--nmax-check", f.fock_n_max_check, "second cutoff for stability, 0 skips");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kParseError;
    }

    try {
        RunConfig const cfg = merge(f);
        std::string text;
        if (*boost) text = cmd_boost(cfg);
        else if (*density) text = cmd_density(cfg);
        else if (*residual) text = cmd_residual(cfg);
        else if (*expand) text = cmd_expand(cfg);
        else if (*modes) text = cmd_modes(cfg);
        else text = cmd_algebra_check(cfg);
        out << text;
        return kOk;
    } catch (UsageError const& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (ConfigError const& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (IoError const& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (QuadratureUnderResolved const& e) {
        err << "error: " << e.what() << "\n";
        return kConvergenceError;
    } catch (ToleranceFailure const& e) {
        err << "error: " << e.what() << "\n";
        return kConvergenceError;
    } catch (Error const& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace covosc::cli
