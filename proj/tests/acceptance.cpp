// One line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bohr/commands.hpp"
#include "bohr/corpus.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/sharpness.hpp"

namespace op = bohr::op;
using bohr::RadiusProblem;

namespace {

constexpr double kDigitsTol = 1e-3;
constexpr double kResidualTol = 1e-12;
constexpr double kFastSeconds = 0.1;
constexpr double kLogFormTol = 1e-10;
constexpr double kContinuityTol = 1e-4;
constexpr double kIdentityTol = 1e-12;
constexpr double kSweepSeconds = 60.0;
constexpr double kReconstructionTol = 1e-10;
constexpr double kRatioFactor = 4.0;
constexpr double kOracleTol = 1e-8;
constexpr double kExactTol = 1e-14;
constexpr double kConcavityTol = 1e-10;

struct Outcome {
    bool passed;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Outcome radius_check(const bohr::CommandOptions& o, double expected) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = bohr::cmd_radius(o);
    const double elapsed = seconds_since(start);
    const double root = report.results["root"].get<double>();
    const double residual = report.results["residual"].get<double>();
    const bool ok = std::abs(root - expected) <= kDigitsTol && std::abs(residual) < kResidualTol &&
                    elapsed < kFastSeconds;
    return {ok, "root=" + num(root) + " residual=" + num(residual) + " time=" + num(elapsed) + "s"};
}

Outcome criterion1() {
    bohr::CommandOptions o;
    o.op = "cesaro";
    o.beta = 1.0;
    return radius_check(o, 0.5335);
}

Outcome criterion2() {
    bohr::CommandOptions o;
    o.op = "bernardi";
    o.gamma = 1.0;
    o.m = 0;
    auto out = radius_check(o, 0.5828);
    const RadiusProblem libera{op::Bernardi{1.0, 0}};
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double x = i / 51.0;
        const double log_form = (3.0 * x + 2.0 * std::log1p(-x)) / x;
        worst = std::max(worst, std::abs(bohr::radius_equation(libera, x) - log_form));
    }
    out.passed = out.passed && worst <= kLogFormTol;
    out.detail += " log-form gap=" + num(worst);
    return out;
}

Outcome criterion3() {
    bohr::CommandOptions o;
    o.op = "bernardi";
    o.gamma = 0.0;
    o.m = 1;
    const auto report = bohr::cmd_radius(o);
    const double root = report.results["root"].get<double>();
    return {std::abs(root - 0.5828) <= kDigitsTol, "root=" + num(root)};
}

Outcome criterion4() {
    const double lo = bohr::solve_radius(RadiusProblem{op::CesaroBeta{1.0 - 1e-6}}).root;
    const double mid = bohr::solve_radius(RadiusProblem{op::CesaroBeta{1.0}}).root;
    const double hi = bohr::solve_radius(RadiusProblem{op::CesaroBeta{1.0 + 1e-6}}).root;
    const double spread = std::max({lo, mid, hi}) - std::min({lo, mid, hi});
    return {spread <= kContinuityTol, "spread=" + num(spread)};
}

Outcome criterion5() {
    double worst = 0.0;
    for (double beta : {0.3, 0.5, 1.0, 2.0, 3.7, 10.0}) {
        worst = std::max(worst, bohr::cumulative_identity_residual(beta, 200));
    }
    return {worst <= kIdentityTol, "max residual=" + num(worst)};
}

Outcome criterion6() {
    struct Case {
        std::string op;
        double beta = 1.0;
        double gamma = 1.0;
        int m = 0;
    };
    const std::vector<Case> cases = {{"cesaro", 0.5}, {"cesaro", 1.0}, {"cesaro", 2.0},
                                     {"bernardi", 1.0, 1.0, 0}, {"bernardi", 1.0, 0.0, 1}, {"bernardi", 1.0, 2.0, 1}};
    const auto start = std::chrono::steady_clock::now();
    std::size_t violations = 0;
    for (const auto& c : cases) {
        bohr::CommandOptions o;
        o.op = c.op;
        o.beta = c.beta;
        o.gamma = c.gamma;
        o.m = c.m;
        o.samples = 1000;
        o.seed = 20240601;
        o.threads = 1;
        o.r_mode = "below";
        const auto report = bohr::cmd_verify(o);
        violations += report.results["violations"].get<std::size_t>();
    }
    const double elapsed = seconds_since(start);
    return {violations == 0 && elapsed < kSweepSeconds,
            "violations=" + std::to_string(violations) + " time=" + num(elapsed) + "s"};
}

Outcome criterion7() {
    const std::vector<std::pair<RadiusProblem, double>> cases = {
        {RadiusProblem{op::CesaroBeta{1.0}}, 0.55},
        {RadiusProblem{op::Bernardi{1.0, 0}}, 0.60},
        {RadiusProblem{op::Identity{}}, 0.40},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [problem, r] : cases) {
        const auto report = bohr::violation_search(problem, r);
        ok = ok && report.witness.has_value();
        detail += report.witness ? "a=" + num(report.witness->a) + " " : "none ";
    }
    return {ok, detail};
}

Outcome criterion8() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Majorants reach ~1e4 for large beta near r = 1, so the gap is scaled by max(1, |direct|).
    double worst_cesaro = 0.0;
    double worst_bernardi = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double beta = 0.1 + 4.9 * unit(rng);
        const double a = 0.999 * unit(rng);
        const double r = 0.05 + 0.9 * unit(rng);
        const RadiusProblem p{op::CesaroBeta{beta}};
        const double direct = bohr::extremal_majorant(p, a, r);
        worst_cesaro = std::max(worst_cesaro, std::abs(bohr::decompose(p, a, r).total - direct) / std::max(1.0, direct));
    }
    for (int i = 0; i < 100; ++i) {
        const int m = static_cast<int>(rng() % 4);
        const double gamma = -m + 0.05 + (5.0 + m) * unit(rng);
        const double a = 0.999 * unit(rng);
        const double r = 0.05 + 0.9 * unit(rng);
        const RadiusProblem p{op::Bernardi{gamma, m}};
        const double direct = bohr::extremal_majorant(p, a, r);
        worst_bernardi = std::max(worst_bernardi, std::abs(bohr::decompose(p, a, r).total - direct) / std::max(1.0, direct));
    }
    return {worst_cesaro <= kReconstructionTol && worst_bernardi <= kReconstructionTol,
            "cesaro=" + num(worst_cesaro) + " bernardi=" + num(worst_bernardi)};
}

Outcome criterion9() {
    const std::vector<RadiusProblem> problems = {
        {op::CesaroBeta{0.5}},  {op::CesaroBeta{1.0}},  {op::CesaroBeta{2.0}},
        {op::Bernardi{1.0, 0}}, {op::Bernardi{0.0, 1}}, {op::Bernardi{2.0, 1}},
    };
    double worst = 1.0;
    for (const auto& p : problems) {
        for (double r : {0.3, 0.5, 0.8}) {
            const auto ratios = bohr::quadratic_remainder_check(p, r, {0.9, 0.99, 0.999});
            const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end(),
                                                      [](double x, double y) { return std::abs(x) < std::abs(y); });
            worst = std::max(worst, std::abs(*hi) / std::abs(*lo));
        }
    }
    return {worst <= kRatioFactor, "max ratio spread=" + num(worst)};
}

Outcome criterion10() {
    std::vector<bohr::BoundedFunction> corpus = {
        bohr::BoundedFunction::constant({0.3, -0.4}),
        bohr::BoundedFunction::polynomial({0.5, 0.25, bohr::Complex(0.0, 0.25)}),
        bohr::BoundedFunction::blaschke({bohr::Complex(0.6, 0.2), -0.85, 0.0}, std::polar(1.0, 0.7)),
        bohr::BoundedFunction::blaschke({bohr::Complex(-0.2, 0.5)}, 0.6),
        bohr::BoundedFunction::extremal_phi(0.7),
        bohr::BoundedFunction::extremal_psi(0.4, 2),
    };
    const std::vector<bohr::OperatorKind> kinds = {
        op::CesaroBeta{0.4}, op::CesaroBeta{1.0}, op::CesaroBeta{2.5}, op::CBeta{0.7}, op::Bernardi{2.0, 1},
        op::Bernardi{-0.6, 1}, op::Bernardi{0.3, 0}, op::Libera{}, op::Alexander{}, op::PrimitiveI{}, op::Identity{},
    };
    double worst = 0.0;
    for (const auto& base : corpus) {
        for (const auto& kind : kinds) {
            const auto f = base.times_z_power(bohr::required_leading_zeros(kind));
            for (int k = 0; k < 8; ++k) {
                const bohr::Complex z = std::polar(0.5, 0.785398163397448 * k + 0.1);
                worst = std::max(worst, std::abs(bohr::series_value(kind, f, z) - bohr::quadrature_value(kind, f, z, 1e-12)));
            }
        }
    }
    const double exact = std::abs(bohr::closed_bound(op::CesaroBeta{2.0}, 0.5) - 2.0);
    return {worst <= kOracleTol && exact <= kExactTol, "max gap=" + num(worst) + " closed_bound gap=" + num(exact)};
}

Outcome criterion11() {
    const auto grid = bohr::uniform_a_grid(101);
    double worst = -1.0;
    for (double beta : {0.3, 0.5, 1.0, 2.0, 5.0}) {
        const RadiusProblem p{op::CesaroBeta{beta}};
        for (double r : {0.2, 0.5, bohr::solve_radius(p).root, 0.9}) {
            worst = std::max(worst, bohr::concavity_check(p, r, grid));
        }
    }
    for (auto [gamma, m] : std::vector<std::pair<double, int>>{{1.0, 0}, {0.0, 1}, {2.0, 1}, {-1.5, 2}, {4.0, 3}}) {
        const RadiusProblem p{op::Bernardi{gamma, m}};
        for (double r : {0.2, 0.5, bohr::solve_radius(p).root, 0.9}) {
            worst = std::max(worst, bohr::concavity_check(p, r, grid));
        }
    }
    return {worst <= kConcavityTol, "max second difference=" + num(worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 cesaro radius", criterion1},
        {"2 libera radius", criterion2},
        {"3 alexander radius", criterion3},
        {"4 beta continuity", criterion4},
        {"5 convolution identity", criterion5},
        {"6 inequality sweep", criterion6},
        {"7 sharpness witnesses", criterion7},
        {"8 decomposition reconstruction", criterion8},
        {"9 quadratic remainder", criterion9},
        {"10 oracle equivalence", criterion10},
        {"11 concavity", criterion11},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome out{false, ""};
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %-32s %s\n", out.passed ? "PASS" : "FAIL", name.c_str(), out.detail.c_str());
        failures += out.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
