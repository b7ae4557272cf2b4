#include "bohr/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohr/corpus.hpp"
#include "bohr/operators.hpp"
#include "bohr/sharpness.hpp"

namespace bohr {

namespace {

SuiteResult finish(std::string name, double worst, double threshold, int checks) {
    return SuiteResult{std::move(name), worst <= threshold, worst, threshold, checks};
}

}  // namespace

SuiteResult identity_suite(WeightGenerator generator) {
    double worst = 0.0;
    int checks = 0;
    for (double beta : {0.3, 0.5, 1.0, 2.0, 3.7, 10.0}) {
        worst = std::max(worst, cumulative_identity_residual(beta, 200, generator));
        ++checks;
    }
    return finish("identity", worst, 1e-12, checks);
}

SuiteResult concavity_suite() {
    const std::vector<RadiusProblem> problems = {
        {op::CesaroBeta{0.5}}, {op::CesaroBeta{1.0}},   {op::CesaroBeta{2.0}},   {op::Bernardi{1.0, 0}},
        {op::Bernardi{0.0, 1}}, {op::Bernardi{2.0, 1}}, {op::Identity{}},
    };
    const auto grid = uniform_a_grid(101);
    double worst = -1.0;
    int checks = 0;
    for (const auto& problem : problems) {
        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            worst = std::max(worst, concavity_check(problem, r, grid));
            ++checks;
        }
    }
    return finish("concavity", worst, 1e-10, checks);
}

SuiteResult wiener_suite(std::uint64_t seed, int count) {
    double worst = -1.0;
    int checks = 0;
    for (int i = 0; i < count; ++i) {
        const auto f = random_schur(mix_seed(seed, static_cast<std::uint64_t>(i)), 6, kBlaschkeRadiusCap);
        const auto coeffs = taylor_coeffs(f, 200);
        if (std::abs(coeffs[0]) >= 1.0 - 1e-12) {
            continue;  // constant of modulus one: no Wiener budget
        }
        worst = std::max(worst, wiener_excess(coeffs));
        ++checks;
    }
    return finish("wiener", worst, 1e-12, checks);
}

SuiteResult series_quadrature_suite(std::uint64_t seed, int count) {
    const std::vector<OperatorKind> kinds = {
        op::CesaroBeta{0.5}, op::CesaroBeta{1.0}, op::CesaroBeta{2.0}, op::CBeta{1.0},  op::Bernardi{1.0, 0},
        op::Bernardi{0.0, 1}, op::Bernardi{-0.5, 1}, op::Libera{},     op::Alexander{}, op::PrimitiveI{},
    };
    double worst = 0.0;
    int checks = 0;
    for (int i = 0; i < count; ++i) {
        const auto base = random_schur(mix_seed(seed, static_cast<std::uint64_t>(i)), 4, kBlaschkeRadiusCap);
        const Complex z = std::polar(0.5, 2.0 * std::numbers::pi * (i + 0.25) / count);
        for (const auto& kind : kinds) {
            const auto f = base.times_z_power(required_leading_zeros(kind));
            const Complex series = series_value(kind, f, z);
            const Complex integral = quadrature_value(kind, f, z, 1e-12);
            worst = std::max(worst, std::abs(series - integral));
            ++checks;
        }
    }
    return finish("series_quadrature", worst, 1e-8, checks);
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, WeightGenerator generator) {
    return {identity_suite(generator), concavity_suite(), wiener_suite(seed, 200), series_quadrature_suite(seed, 12)};
}

}  // namespace bohr
