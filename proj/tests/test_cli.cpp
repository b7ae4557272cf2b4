#include <cmath>
#include <string>

#include "bohr/commands.hpp"
#include "bohr/corpus.hpp"
#include "bohr/errors.hpp"
#include "bohr/selftest.hpp"
#include "doctest.h"
#include "json.hpp"

using bohr::CommandOptions;
using nlohmann::json;

namespace {

bohr::BinomialWeights corrupted(double beta, std::size_t n_max) {
    auto w = bohr::binomial_coeffs(beta, n_max);
    if (w.weights.size() > 7) {
        w.weights[7] *= 1.0 + 1e-6;
    }
    return w;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n' ? 1 : 0;
    }
    return n;
}

}  // namespace

TEST_CASE("radius report carries the fixed top-level keys") {
    CommandOptions o;
    o.seed = 17;
    const auto report = bohr::cmd_radius(o);
    const auto doc = json::parse(bohr::to_json(report));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    // nlohmann::json sorts keys; the writer's own order is checked on the text.
    CHECK(keys == std::vector<std::string>{"command", "params", "results", "seed", "version"});
    const std::string text = bohr::to_json(report);
    CHECK(text.find("\"command\"") < text.find("\"params\""));
    CHECK(text.find("\"params\"") < text.find("\"results\""));
    CHECK(text.find("\"results\"") < text.find("\"seed\""));
    CHECK(text.find("\"seed\"") < text.find("\"version\""));
    CHECK(doc["command"] == "radius");
    CHECK(doc["seed"] == 17);
    CHECK(doc["version"] == bohr::kToolVersion);
    CHECK(std::abs(doc["results"]["root"].get<double>() - 0.5335892339199948) <= 1e-12);
    CHECK(std::abs(doc["results"]["residual"].get<double>()) <= 1e-12);
    CHECK(report.exit_code == bohr::kExitOk);
}

TEST_CASE("doubles round-trip through the JSON writer") {
    CommandOptions o;
    o.op = "libera";
    const auto report = bohr::cmd_radius(o);
    const auto doc = json::parse(bohr::to_json(report));
    CHECK(doc["results"]["root"].get<double>() == report.results["root"].get<double>());
    CHECK(bohr::format_number(0.1) == "0.10000000000000001");
    CHECK(bohr::format_number(2.0) == "2");
}

TEST_CASE("csv output has the documented header") {
    CommandOptions o;
    o.op = "bernardi";
    o.gamma = 2.0;
    o.m = 1;
    const auto csv = bohr::to_csv(bohr::cmd_radius(o));
    CHECK(csv.rfind("op,root,residual,bracket_lo,bracket_hi,iterations\n", 0) == 0);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(bohr::csv_field("plain") == "plain");
    CHECK(bohr::csv_field("a,b") == "\"a,b\"");
    CHECK(bohr::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(bohr::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("curve command") {
    CommandOptions o;
    o.grid = {0.5, 1.0, 2.0};
    const auto report = bohr::cmd_curve(o);
    REQUIRE(report.table.rows.size() == 3);
    CHECK(report.table.header == std::vector<std::string>{"param", "root", "residual"});
    CHECK(std::abs(report.results["rows"][2]["root"].get<double>() - 0.5) <= 1e-12);
    CHECK(std::abs(report.results["rows"][0]["root"].get<double>() - 5.0 / 9.0) <= 1e-12);
    CHECK(report.results["continuous"] == true);

    CommandOptions empty;
    const auto none = bohr::cmd_curve(empty);
    CHECK(none.table.rows.empty());
    CHECK(bohr::to_csv(none) == "param,root,residual\n");
    CHECK(none.exit_code == bohr::kExitOk);

    CommandOptions ranged;
    ranged.op = "bernardi";
    ranged.m = 1;
    ranged.grid_from = 0.0;
    ranged.grid_to = 1.0;
    ranged.grid_steps = 5;
    CHECK(bohr::cmd_curve(ranged).table.rows.size() == 5);
}

TEST_CASE("verify is deterministic and thread-count independent") {
    CommandOptions o;
    o.samples = 300;
    o.seed = 12345;
    const std::string serial = bohr::to_json(bohr::cmd_verify(o));
    CHECK(serial == bohr::to_json(bohr::cmd_verify(o)));
    o.threads = 4;
    CHECK(serial == bohr::to_json(bohr::cmd_verify(o)));
    const auto doc = json::parse(serial);
    CHECK(doc["seed"] == 12345);
    CHECK(doc["results"]["violations"] == 0);
    CHECK(doc["results"]["passed"] == true);
    o.seed = 12346;
    CHECK(serial != bohr::to_json(bohr::cmd_verify(o)));
}

TEST_CASE("verify modes") {
    CommandOptions o;
    o.op = "libera";
    o.samples = 100;
    o.r_mode = "at";
    CHECK(bohr::cmd_verify(o).exit_code == bohr::kExitOk);
    o.r_mode = "above";
    const auto above = bohr::cmd_verify(o);
    CHECK(above.exit_code == bohr::kExitOk);
    CHECK(above.results["passed"] == true);
    CHECK(above.results["witness"].is_object());
    o.r_mode = "sideways";
    CHECK_THROWS_AS(bohr::cmd_verify(o), bohr::DomainError);
    o.r_mode = "below";
    o.samples = 0;
    CHECK_THROWS_AS(bohr::cmd_verify(o), bohr::DomainError);
}

TEST_CASE("unknown operators and bad parameters are domain errors") {
    CommandOptions o;
    o.op = "fourier";
    CHECK_THROWS_AS(bohr::cmd_radius(o), bohr::DomainError);
    o.op = "cesaro";
    o.beta = -1.0;
    CHECK_THROWS_AS(bohr::cmd_radius(o), bohr::DomainError);
    o.op = "bernardi";
    o.gamma = -1.0;
    o.m = 1;
    CHECK_THROWS_AS(bohr::cmd_radius(o), bohr::DomainError);
}

TEST_CASE("sharpness command reconstructs every row") {
    CommandOptions o;
    o.op = "cesaro";
    o.beta = 1.0;
    const auto report = bohr::cmd_sharpness(o);
    CHECK(report.exit_code == bohr::kExitOk);
    CHECK(report.results["max_mismatch"].get<double>() <= 1e-9);
    CHECK(report.table.rows.size() == 6);
    CHECK(report.results["concavity_max_second_difference"].get<double>() < 0.0);
}

TEST_CASE("selftest passes and catches a corrupted recurrence") {
    CommandOptions o;
    o.seed = 3;
    const auto good = bohr::cmd_selftest(o);
    CHECK(good.exit_code == bohr::kExitOk);
    CHECK(good.results["passed"] == true);
    CHECK(good.seed == 3);
    const auto bad = bohr::cmd_selftest(o, &corrupted);
    CHECK(bad.exit_code == bohr::kExitFailure);
    CHECK(bad.results["passed"] == false);
    CHECK_FALSE(bohr::identity_suite(&corrupted).passed);
}

TEST_CASE("per-sample seed mixing is the published function") {
    // splitmix64(42 ^ splitmix64(7)), computed outside this code base.
    CHECK(bohr::mix_seed(42, 7) == 7974615062405353404ULL);
}
