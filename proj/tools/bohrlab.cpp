// bohrlab: Bohr radii, inequality sweeps and sharpness experiments for
// integral operators on bounded analytic functions.
//
//   bohrlab radius    --op cesaro --beta 1
//   bohrlab curve     --op cesaro --from 0.5 --to 3 --steps 26 --format csv
//   bohrlab verify    --op bernardi --gamma 2 --m 1 --samples 1000 --seed 7
//   bohrlab sharpness --op cesaro --beta 1 --r 0.6
//   bohrlab selftest

#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "bohr/commands.hpp"
#include "bohr/errors.hpp"

namespace {

void add_operator_flags(CLI::App* app, bohr::CommandOptions& o) {
    app->add_option("--op", o.op, "Operator")
        ->check(CLI::IsMember({"cesaro", "cbeta", "bernardi", "libera", "alexander", "primitive", "bohr"}));
    app->add_option("--beta", o.beta, "Cesaro parameter beta > 0");
    app->add_option("--gamma", o.gamma, "Bernardi parameter gamma > -m");
    app->add_option("--m", o.m, "Order of the zero at the origin (Bernardi)");
    app->add_option("--tol", o.tol, "Root solver tolerance");
}

void add_output_flags(CLI::App* app, std::string& format, std::string& out) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", out, "Write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr-radius laboratory for Cesaro-type and Bernardi integral operators"};
    app.set_version_flag("--version", std::string(bohr::kToolVersion));
    app.require_subcommand(1);

    bohr::CommandOptions o;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;

    auto* radius = app.add_subcommand("radius", "Solve the Bohr radius equation for an operator");
    auto* curve = app.add_subcommand("curve", "Radius as a function of beta or gamma");
    auto* verify = app.add_subcommand("verify", "Check the Bohr inequality over a seeded corpus");
    auto* sharpness = app.add_subcommand("sharpness", "Extremal decompositions and remainder ratios");
    auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency suites");

    for (auto* sub : {radius, curve, verify, sharpness, selftest}) {
        add_output_flags(sub, format, out);
        sub->add_option("--seed", seed, "Master seed");
    }
    for (auto* sub : {radius, curve, verify, sharpness}) {
        add_operator_flags(sub, o);
    }
    curve->add_option("--grid", o.grid, "Explicit parameter values")->delimiter(',');
    curve->add_option("--from", o.grid_from, "Range start");
    curve->add_option("--to", o.grid_to, "Range end");
    curve->add_option("--steps", o.grid_steps, "Number of range points");

    verify->add_option("--samples", o.samples, "Number of corpus functions");
    verify->add_option("--r-mode", o.r_mode, "Radius placement")->check(CLI::IsMember({"below", "at", "above"}));
    verify->add_option("--r", o.r, "Radius for above mode");
    verify->add_option("--eps", o.eps, "Majorant accuracy");
    verify->add_option("--threads", o.threads, "Worker threads");
    verify->add_option("--max-factors", o.max_factors, "Blaschke factors per corpus function");

    sharpness->add_option("--r", o.r, "Radius");
    sharpness->add_option("--a", o.a_values, "Extremal parameters a")->delimiter(',');
    sharpness->add_option("--eps", o.eps, "Majorant accuracy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bohr::kExitDomain;
    }
    o.seed = seed;

    bohr::RunReport report;
    try {
        if (*radius) {
            report = bohr::cmd_radius(o);
        } else if (*curve) {
            report = bohr::cmd_curve(o);
        } else if (*verify) {
            report = bohr::cmd_verify(o);
        } else if (*sharpness) {
            report = bohr::cmd_sharpness(o);
        } else {
            report = bohr::cmd_selftest(o);
        }
    } catch (const bohr::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bohr::kExitDomain;
    } catch (const bohr::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bohr::kExitDomain;
    } catch (const bohr::ConvergenceError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return bohr::kExitSolver;
    } catch (const bohr::TruncationError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return bohr::kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bohr::kExitFailure;
    }

    const std::string text = format == "csv" ? bohr::to_csv(report) : bohr::to_json(report);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out << "\n";
            return bohr::kExitFailure;
        }
        file << text;
    }
    if (report.command == "verify" && report.exit_code == bohr::kExitViolation) {
        std::cerr << "verification failed: see results.first_violation / results.witness\n";
    }
    return report.exit_code;
}
