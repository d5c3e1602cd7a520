#include "covosc/config.hpp"

#include <cmath>

#include "covosc/error.hpp"
#include "covosc/quadrature.hpp"

namespace covosc {

std::string signature_name(Signature sig) {
    return sig == Signature::SpacePositive ? "space-positive" : "time-positive";
}

Signature parse_signature(std::string const& name) {
    if (name == "space-positive") return Signature::SpacePositive;
    if (name == "time-positive") return Signature::TimePositive;
    throw ConfigError("signature must be 'space-positive' or 'time-positive', got '" + name +
                      "'");
}

void RunConfig::validate() const {
    if (!std::isfinite(eta_max) || eta_max <= 0.0) {
        throw InvalidArgument("eta_max must be positive");
    }
    if (quad_order < 1 || 2 * quad_order > QuadratureRule::kMaxOrder) {
        throw InvalidArgument("quad_order must lie in [1, " +
                              std::to_string(QuadratureRule::kMaxOrder / 2) + "]");
    }
    if (n_max < 0 || n_limit < 0) {
        throw InvalidArgument("n_max and n_limit must be non-negative");
    }
    if (fock_n_max_check < 0) {
        throw InvalidArgument("fock_n_max_check must be non-negative");
    }
    if (format != "csv" && format != "json") {
        throw InvalidArgument("format must be csv or json");
    }
    if (!(residual_tolerance > 0.0) || !(ratio_floor >= 0.0)) {
        throw InvalidArgument("tolerances must be positive");
    }
    for (auto const& p : points) {
        if (!std::isfinite(p.z) || !std::isfinite(p.t)) {
            throw InvalidArgument("points must be finite");
        }
    }
}

namespace {

template <typename T>
T get_as(nlohmann::json const& v, std::string const& key) {
    try {
        return v.get<T>();
    } catch (nlohmann::json::exception const&) {
        throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

void apply_config_json(RunConfig& cfg, nlohmann::json const& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (auto const& [key, v] : j.items()) {
        if (key == "eta") cfg.eta = get_as<double>(v, key);
        else if (key == "eta_max") cfg.eta_max = get_as<double>(v, key);
        else if (key == "z_min") cfg.grid.z_min = get_as<double>(v, key);
        else if (key == "z_max") cfg.grid.z_max = get_as<double>(v, key);
        else if (key == "t_min") cfg.grid.t_min = get_as<double>(v, key);
        else if (key == "t_max") cfg.grid.t_max = get_as<double>(v, key);
        else if (key == "n_z") cfg.grid.n_z = get_as<int>(v, key);
        else if (key == "n_t") cfg.grid.n_t = get_as<int>(v, key);
        else if (key == "quad_order") cfg.quad_order = get_as<int>(v, key);
        else if (key == "min_quad_order") cfg.min_quad_order = get_as<int>(v, key);
        else if (key == "n_max") cfg.n_max = get_as<int>(v, key);
        else if (key == "n_limit") cfg.n_limit = get_as<int>(v, key);
        else if (key == "fock_n_max") cfg.fock_n_max = get_as<int>(v, key);
        else if (key == "fock_n_max_check") cfg.fock_n_max_check = get_as<int>(v, key);
        else if (key == "h") cfg.h = get_as<double>(v, key);
        else if (key == "residual_tolerance") cfg.residual_tolerance = get_as<double>(v, key);
        else if (key == "ratio_floor") cfg.ratio_floor = get_as<double>(v, key);
        else if (key == "signature") cfg.signature = parse_signature(get_as<std::string>(v, key));
        else if (key == "m") cfg.m = get_as<double>(v, key);
        else if (key == "A") cfg.a = get_as<double>(v, key);
        else if (key == "C") cfg.c = get_as<double>(v, key);
        else if (key == "out") cfg.out = get_as<std::string>(v, key);
        else if (key == "format") cfg.format = get_as<std::string>(v, key);
        else if (key == "points") {
            cfg.points.clear();
            for (auto const& p : get_as<std::vector<std::vector<double>>>(v, key)) {
                if (p.size() != 2) {
                    throw ConfigError("each point must be a [z, t] pair");
                }
                cfg.points.push_back({p[0], p[1]});
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

nlohmann::ordered_json config_to_json(RunConfig const& cfg) {
    nlohmann::ordered_json j;
    j["eta"] = cfg.eta;
    j["eta_max"] = cfg.eta_max;
    j["z_min"] = cfg.grid.z_min;
    j["z_max"] = cfg.grid.z_max;
    j["t_min"] = cfg.grid.t_min;
    j["t_max"] = cfg.grid.t_max;
    j["n_z"] = cfg.grid.n_z;
    j["n_t"] = cfg.grid.n_t;
    j["quad_order"] = cfg.quad_order;
    j["min_quad_order"] = cfg.min_quad_order;
    j["n_max"] = cfg.n_max;
    j["n_limit"] = cfg.n_limit;
    j["fock_n_max"] = cfg.fock_n_max;
    j["fock_n_max_check"] = cfg.fock_n_max_check;
    j["h"] = cfg.h;
    j["residual_tolerance"] = cfg.residual_tolerance;
    j["ratio_floor"] = cfg.ratio_floor;
    j["signature"] = signature_name(cfg.signature);
    j["m"] = cfg.m;
    j["A"] = cfg.a;
    j["C"] = cfg.c;
    auto pts = nlohmann::ordered_json::array();
    for (auto const& p : cfg.points) {
        pts.push_back({p.z, p.t});
    }
    j["points"] = std::move(pts);
    j["out"] = cfg.out;
    j["format"] = cfg.format;
    return j;
}

}  // namespace covosc
