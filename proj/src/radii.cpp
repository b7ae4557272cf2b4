#include "bohr/radii.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/summation.hpp"

namespace bohr {

namespace {

constexpr double kBetaLimitBand = 1e-8;
constexpr std::size_t kMaxSeriesTerms = 50'000'000;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_unit_interval(double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("argument must lie in (0, 1), got " + std::to_string(x));
    }
}

OperatorKind as_operator(const RadiusFamily& family) {
    return std::visit([](const auto& k) -> OperatorKind { return k; }, family);
}

double cesaro_equation(double beta, double x) {
    const double log1m = std::log1p(-x);
    if (std::abs(beta - 1.0) < kBetaLimitBand) {
        return -3.0 * log1m - 2.0 * x / (1.0 - x);
    }
    const double first = -std::expm1((1.0 - beta) * log1m) / (1.0 - beta);
    const double second = std::expm1(-beta * log1m) / beta;
    return 3.0 * first - 2.0 * second;
}

double bernardi_equation(double gamma, int m, double x, double tail_eps) {
    KahanSum sum;
    double power = std::pow(x, m + 1);
    for (std::size_t n = static_cast<std::size_t>(m) + 1;; ++n) {
        const double denom = static_cast<double>(n) + gamma;
        sum += power / denom;
        power *= x;
        if (power / ((denom + 1.0) * (1.0 - x)) <= tail_eps) {
            break;
        }
        if (n > kMaxSeriesTerms) {
            throw TruncationError("Bernardi radius series cannot reach the tail budget at x = " +
                                  std::to_string(x));
        }
    }
    return std::pow(x, m) / (m + gamma) - 2.0 * sum.value();
}

}  // namespace

RadiusProblem radius_problem_for(const OperatorKind& kind) {
    validate(kind);
    return std::visit(Overloaded{
                          [](const op::CesaroBeta& k) { return RadiusProblem{k}; },
                          [](const op::CBeta& k) { return RadiusProblem{op::CesaroBeta{k.beta}}; },
                          [](const op::Bernardi& k) { return RadiusProblem{k}; },
                          [](const op::Libera&) { return RadiusProblem{op::Bernardi{1.0, 0}}; },
                          [](const op::Alexander&) { return RadiusProblem{op::Bernardi{0.0, 1}}; },
                          [](const op::PrimitiveI&) { return RadiusProblem{op::Bernardi{1.0, 0}}; },
                          [](const op::Identity&) { return RadiusProblem{op::Identity{}}; },
                      },
                      kind);
}

double closed_bound(const RadiusFamily& family, double r) {
    return operator_bound(as_operator(family), r);
}

double radius_equation(const RadiusProblem& problem, double x) {
    check_unit_interval(x);
    validate(as_operator(problem.family));
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) { return cesaro_equation(k.beta, x); },
                          [&](const op::Bernardi& k) {
                              return bernardi_equation(k.gamma, k.m, x, problem.series_tail_eps);
                          },
                          [&](const op::Identity&) { return 1.0 - 2.0 * x / (1.0 - x); },
                      },
                      problem.family);
}

RadiusResult solve_radius(const RadiusProblem& problem, double tol) {
    if (!(tol >= 1e-14)) {
        throw DomainError("solver tolerance must be >= 1e-14");
    }
    auto equation = [&](double x) { return radius_equation(problem, x); };

    // Scan points: 1e-6, 2e-6, 4e-6, ... up to 1/2, then 1 - 2^-k down to
    // 1 - 1e-6. The root is bracketed by the first sign change.
    std::vector<double> scan;
    for (double x = 1e-6; x < 0.5; x *= 2.0) {
        scan.push_back(x);
    }
    for (double gap = 0.5; gap > 1e-6; gap *= 0.5) {
        scan.push_back(1.0 - gap);
    }
    scan.push_back(1.0 - 1e-6);

    double lo = scan.front();
    double f_lo = equation(lo);
    if (!(f_lo > 0.0)) {
        throw ConvergenceError("radius equation is not positive near 0; no bracket");
    }
    double hi = 0.0;
    double f_hi = 0.0;
    bool bracketed = false;
    for (std::size_t i = 1; i < scan.size(); ++i) {
        const double f = equation(scan[i]);
        if (f <= 0.0) {
            hi = scan[i];
            f_hi = f;
            bracketed = true;
            break;
        }
        lo = scan[i];
        f_lo = f;
    }
    if (!bracketed) {
        throw ConvergenceError("no sign change of the radius equation on [1e-6, 1 - 1e-6]");
    }

    RadiusResult out;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        const double f_mid = equation(mid);
        ++out.iterations;
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
            if (f_mid == 0.0) {
                lo = mid;
                f_lo = f_mid;
                break;
            }
        }
    }

    double best = 0.5 * (lo + hi);
    double best_residual = (lo == hi) ? f_lo : equation(best);
    if (f_lo != f_hi) {
        const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if (secant >= lo && secant <= hi) {
            const double f_secant = equation(secant);
            if (std::abs(f_secant) < std::abs(best_residual)) {
                best = secant;
                best_residual = f_secant;
            }
        }
    }
    out.root = best;
    out.residual = best_residual;
    out.bracket = {lo, hi};
    return out;
}

RadiusCurve radius_curve(const RadiusFamily& base, const std::vector<double>& grid, double tol) {
    RadiusCurve curve;
    curve.rows.reserve(grid.size());
    for (double param : grid) {
        RadiusProblem problem = std::visit(Overloaded{
                                               [&](const op::CesaroBeta&) { return RadiusProblem{op::CesaroBeta{param}}; },
                                               [&](const op::Bernardi& k) { return RadiusProblem{op::Bernardi{param, k.m}}; },
                                               [&](const op::Identity&) { return RadiusProblem{op::Identity{}}; },
                                           },
                                           base);
        curve.rows.push_back({param, solve_radius(problem, tol)});
    }
    // Each step is compared with the slopes of the neighbouring steps.
    const auto& rows = curve.rows;
    auto step_slope = [&](std::size_t i) {
        const double dp = std::abs(rows[i].param - rows[i - 1].param);
        const double dr = std::abs(rows[i].result.root - rows[i - 1].result.root);
        return dp > 0.0 ? dr / dp : 0.0;
    };
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double slope = 0.0;
        bool has_neighbour = false;
        if (i >= 2) {
            slope = std::max(slope, step_slope(i - 1));
            has_neighbour = true;
        }
        if (i + 1 < rows.size()) {
            slope = std::max(slope, step_slope(i + 1));
            has_neighbour = true;
        }
        if (!has_neighbour) {
            continue;
        }
        const double spacing = std::abs(rows[i].param - rows[i - 1].param);
        const double jump = std::abs(rows[i].result.root - rows[i - 1].result.root);
        if (jump > 10.0 * spacing * slope + 10.0 * tol) {
            curve.continuous = false;
        }
    }
    return curve;
}

}  // namespace bohr
