#pragma once

// Effective run configuration of the command-line tool. Precedence:
// command-line flags, then a JSON config file, then these defaults.

#include <iosfwd>
#include <string>
#include <vector>

#include "covosc/density.hpp"
#include "covosc/lightcone.hpp"
#include "covosc/residual.hpp"
#include "json.hpp"

namespace covosc {

struct RunConfig {
    double eta = 0.0;
    double eta_max = kDefaultEtaMax;
    GridSpec grid;
    int quad_order = 64;
    int min_quad_order = 40;
    int n_max = 8;        // expansion truncation
    int n_limit = 64;     // largest admissible Hermite order
    int fock_n_max = 10;  // algebra-check cutoff
    int fock_n_max_check = 14;  // second cutoff for structure-constant stability; 0 skips
    double h = 1e-3;
    double residual_tolerance = 1e-5;
    double ratio_floor = 1e-6;
    Signature signature = Signature::SpacePositive;
    double m = 1.0;
    double a = 5.0;
    double c = 3.0;
    std::vector<SpaceTimePoint> points;
    std::string out;
    std::string format = "csv";

    /// Range checks against the owning modules' bounds. Throws InvalidArgument.
    void validate() const;
};

/// Thrown for malformed or unknown configuration content.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Overlays the keys of a JSON object onto cfg. Unknown keys and wrong types
/// throw ConfigError.
void apply_config_json(RunConfig& cfg, nlohmann::json const& j);

nlohmann::ordered_json config_to_json(RunConfig const& cfg);

std::string signature_name(Signature sig);
Signature parse_signature(std::string const& name);

}  // namespace covosc
