#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "covosc/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using covosc::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir() {
    fs::path const dir = fs::temp_directory_path() / "covosc_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::vector<double> last_csv_row(std::string const& text) {
    std::istringstream is(text);
    std::string line, last;
    while (std::getline(is, line)) {
        if (!line.empty()) last = line;
    }
    std::vector<double> vals;
    std::istringstream ls(last);
    std::string cell;
    while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
    return vals;
}

}  // namespace

TEST_CASE("boost subcommand") {
    auto const rest = invoke({"boost", "--eta", "0", "--point", "1,0"});
    REQUIRE(rest.code == 0);
    auto const row = last_csv_row(rest.out);
    REQUIRE(row.size() == 10);
    CHECK(row[2] == 1.0);
    CHECK(row[3] == 0.0);
    CHECK(std::abs(row[8] - 0.5) < 1e-15);
    CHECK(std::abs(row[9] - 0.5) < 1e-15);

    auto const moving = invoke({"boost", "--eta", "1", "--point", "1,0"});
    REQUIRE(moving.code == 0);
    CHECK(std::abs(last_csv_row(moving.out)[9] - 0.5) < 1e-12);

    auto const json = invoke({"boost", "--eta", "1", "--point", "1,0", "--point", "2,1", "--format", "json"});
    REQUIRE(json.code == 0);
    auto const j = nlohmann::json::parse(json.out);
    CHECK(j["results"].size() == 2);
    CHECK(j["config"]["eta"] == 1.0);

    auto const bad = invoke({"boost", "--eta", "abc", "--point", "1,0"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(invoke({"boost", "--eta", "1", "--point", "1;0"}).code == 2);
    CHECK(invoke({"boost", "--eta", "1"}).code == 2);
    CHECK(invoke({"boost", "--eta", "11", "--point", "1,0"}).code == 4);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("density subcommand writes deterministic grids") {
    auto const dir = scratch_dir();
    auto const a = dir / "rest.csv";
    auto const b = dir / "rest_again.csv";
    auto const r1 = invoke({"density", "--eta", "0", "--out", a.string()});
    auto const r2 = invoke({"density", "--eta", "0", "--out", b.string()});
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(slurp(a) == slurp(b));
    auto const j = nlohmann::json::parse(r1.out);
    CHECK(std::abs(j["results"]["axes_ratio"].get<double>() - 1.0) < 1e-10);

    auto const squeezed = invoke({"density", "--eta", "1", "--out", (dir / "eta1.json").string(),
                                  "--format", "json", "--nz", "161", "--nt", "161"});
    REQUIRE(squeezed.code == 0);
    auto const js = nlohmann::json::parse(squeezed.out);
    CHECK(std::abs(js["results"]["axes_ratio"].get<double>() - std::exp(1.0)) < 1e-6);
    auto const grid = nlohmann::json::parse(slurp(dir / "eta1.json"));
    CHECK(grid["n_z"] == 161);
    CHECK(grid["values"].size() == 161);

    CHECK(invoke({"density", "--eta", "1"}).code == 2);
    CHECK(invoke({"density", "--eta", "12", "--out", (dir / "x.csv").string()}).code == 4);
    auto const unwritable = invoke({"density", "--eta", "1", "--out", "/nonexistent_dir/x.csv"});
    CHECK(unwritable.code == 3);
    CHECK(unwritable.out.empty());
    CHECK(invoke({"density", "--eta", "1", "--nz", "1", "--out", (dir / "x.csv").string()}).code == 4);
}

TEST_CASE("config file precedence and validation") {
    auto const dir = scratch_dir();
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"eta": 0.5, "points": [[1, 0], [0.5, 0.25]]})";
    }
    auto const from_file = invoke({"boost", "--config", (dir / "cfg.json").string(), "--format", "json"});
    REQUIRE(from_file.code == 0);
    auto const j = nlohmann::json::parse(from_file.out);
    CHECK(j["config"]["eta"] == 0.5);
    CHECK(j["results"].size() == 2);
    CHECK(j["config"]["quad_order"] == 64);  // defaults are echoed too

    auto const overridden =
        invoke({"boost", "--config", (dir / "cfg.json").string(), "--eta", "2", "--format", "json"});
    REQUIRE(overridden.code == 0);
    CHECK(nlohmann::json::parse(overridden.out)["config"]["eta"] == 2.0);

    {
        std::ofstream cfg(dir / "unknown.json");
        cfg << R"({"eta": 0.5, "colour": "blue"})";
    }
    CHECK(invoke({"boost", "--config", (dir / "unknown.json").string(), "--point", "1,0"}).code == 2);
    {
        std::ofstream cfg(dir / "garbled.json");
        cfg << "{eta:";
    }
    CHECK(invoke({"boost", "--config", (dir / "garbled.json").string(), "--point", "1,0"}).code == 2);
    CHECK(invoke({"boost", "--config", (dir / "missing.json").string(), "--point", "1,0"}).code == 3);
}

TEST_CASE("modes subcommand") {
    auto const r = invoke({"modes", "--A", "5", "--C", "3"});
    REQUIRE(r.code == 0);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["results"]["K"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(j["results"]["eta"].get<double>() + 0.34657359027997264) < 1e-12);
    CHECK(j["config"]["A"] == 5.0);
    CHECK(invoke({"modes", "--A", "1", "--C", "1"}).code == 4);
}

TEST_CASE("expand subcommand") {
    auto const r = invoke({"expand", "--eta", "0", "--nmax", "8"});
    REQUIRE(r.code == 0);
    auto const c = nlohmann::json::parse(r.out)["results"]["c"];
    REQUIRE(c.size() == 9);
    CHECK(std::abs(c[0].get<double>() - 1.0) < 1e-12);
    for (std::size_t n = 1; n < c.size(); ++n) CHECK(std::abs(c[n].get<double>()) < 1e-12);

    auto const squeezed = invoke({"expand", "--eta", "1", "--nmax", "32"});
    REQUIRE(squeezed.code == 0);
    auto const js = nlohmann::json::parse(squeezed.out);
    CHECK(js["results"]["ratio_spread"].get<double>() < 1e-8);
    CHECK(invoke({"expand", "--eta", "1", "--nmax", "70"}).code == 4);
    CHECK(invoke({"expand", "--eta", "1", "--order", "10"}).code == 5);
}

TEST_CASE("residual subcommand") {
    auto const r = invoke({"residual", "--eta", "1", "--h", "1e-3"});
    REQUIRE(r.code == 0);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["results"]["lambda"].get<double>()) < 1e-10);
    CHECK(j["results"]["max_residual"].get<double>() < 1e-5);
    CHECK(std::abs(j["results"]["lambda_4d"].get<double>() - 1.0) < 1e-5);

    auto const flipped = invoke({"residual", "--eta", "0", "--signature", "time-positive"});
    REQUIRE(flipped.code == 0);
    CHECK(std::abs(nlohmann::json::parse(flipped.out)["results"]["lambda_4d"].get<double>() + 1.0) < 1e-5);

    CHECK(invoke({"residual", "--eta", "1", "--h", "0.5"}).code == 4);
    CHECK(invoke({"residual", "--signature", "mostly-minus"}).code == 2);
    // A coarse step at large rapidity misses the default 1e-5 tolerance.
    auto const strict = invoke({"residual", "--eta", "2", "--h", "1e-2"});
    CHECK(strict.code == 5);
    CHECK(strict.out.empty());
}

TEST_CASE("algebra-check subcommand") {
    auto const r = invoke({"algebra-check", "--nmax", "8", "--nmax-check", "0"});
    REQUIRE(r.code == 0);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["pairs"].size() == 45);
    CHECK(j["max_interior_residual"].get<double>() <= 1e-10);
    CHECK(j["generators"].size() == 10);
    CHECK(invoke({"algebra-check", "--nmax", "3"}).code == 4);
}
