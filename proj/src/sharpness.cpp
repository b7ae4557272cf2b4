#include "bohr/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/quadrature.hpp"
#include "bohr/summation.hpp"

namespace bohr {

namespace {

constexpr double kWitnessMargin = 1e-12;
constexpr int kWitnessScanSteps = 40;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_a(double a, bool allow_one) {
    const bool ok = allow_one ? (a >= 0.0 && a <= 1.0) : (a >= 0.0 && a < 1.0);
    if (!ok) {
        throw DomainError("extremal parameter a out of range: " + std::to_string(a));
    }
}

void check_r(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("radius must lie in (0, 1), got " + std::to_string(r));
    }
}

OperatorKind as_operator(const RadiusFamily& family) {
    return std::visit([](const auto& k) -> OperatorKind { return k; }, family);
}

// int_0^r (1-t)^{-beta} dt
double cesaro_i1(double beta, double r) { return r * cesaro_bound(beta, r); }

// int_0^r (1-t)^{-beta-1} dt
double cesaro_i2(double beta, double r) { return std::expm1(-beta * std::log1p(-r)) / beta; }

// sum_{n>m} weight(n) r^n with the tail cut once weight(N+1) r^{N+1}/(1-r)
// drops below eps; weight must be nonincreasing in n.
template <typename Weight>
double weighted_tail_sum(int m, double r, double eps, Weight weight) {
    KahanSum sum;
    double power = std::pow(r, m + 1);
    for (auto n = static_cast<std::size_t>(m) + 1;; ++n) {
        sum += weight(n) * power;
        power *= r;
        if (std::abs(weight(n + 1)) * power / (1.0 - r) <= eps) {
            break;
        }
        if (n > 50'000'000) {
            throw TruncationError("tail sum did not converge at r = " + std::to_string(r));
        }
    }
    return sum.value();
}

// Bernardi-shaped split with coefficient weight w(n) (1/(n+gamma), or 1 for
// the classical problem).
template <typename Weight>
Decomposition weighted_decomposition(int m, double a, double r, double eps, Weight weight) {
    check_a(a, true);
    check_r(r);
    Decomposition d;
    d.bound_term = weight(static_cast<std::size_t>(m)) * std::pow(r, m);
    const double tail = weighted_tail_sum(m, r, eps, weight);
    d.deficit_term = (1.0 - a) * (d.bound_term - 2.0 * tail);
    if (a < 1.0) {
        const double lead = 2.0 * (1.0 - a) + (1.0 - a * a);
        KahanSum sum;
        double power = std::pow(r, m + 1);
        double a_power = 1.0;
        for (auto n = static_cast<std::size_t>(m) + 1;; ++n) {
            sum += (2.0 * (a - 1.0) + (1.0 - a * a) * a_power) * weight(n) * power;
            power *= r;
            a_power *= a;
            if (lead * std::abs(weight(n + 1)) * power / (1.0 - r) <= eps) {
                break;
            }
        }
        d.remainder = sum.value();
    }
    d.total = d.bound_term - d.deficit_term + d.remainder;
    return d;
}

}  // namespace

BoundedFunction extremal_function(const RadiusProblem& problem, double a) {
    check_a(a, true);
    return std::visit(Overloaded{
                          [&](const op::Bernardi& k) { return BoundedFunction::extremal_psi(a, k.m); },
                          [&](const auto&) { return BoundedFunction::extremal_phi(a); },
                      },
                      problem.family);
}

double extremal_majorant(const RadiusProblem& problem, double a, double r, double eps) {
    return majorant_value(as_operator(problem.family), extremal_function(problem, a), r, eps);
}

Decomposition decomposition_cesaro(double beta, double a, double r, double eps) {
    check_a(a, true);
    check_r(r);
    if (!(beta > 0.0)) {
        throw DomainError("Cesaro decomposition needs beta > 0");
    }
    Decomposition d;
    d.bound_term = cesaro_bound(beta, r);
    d.deficit_term = (1.0 - a) / r * radius_equation(RadiusProblem{op::CesaroBeta{beta}}, r);
    if (a < 1.0) {
        const double i1 = cesaro_i1(beta, r);
        const double i2 = cesaro_i2(beta, r);
        auto integrand = [&](double t) { return t / ((1.0 - a * t) * std::pow(1.0 - t, beta)); };
        const double j = quad::integrate(integrand, 0.0, r, std::min(eps, 1e-14)).value;
        d.remainder = 2.0 * (1.0 - a) / r * (i1 - i2) + (1.0 - a * a) / r * j;
    }
    d.total = d.bound_term - d.deficit_term + d.remainder;
    return d;
}

Decomposition decomposition_bernardi(double gamma, int m, double a, double r, double eps) {
    validate(op::Bernardi{gamma, m});
    return weighted_decomposition(m, a, r, eps,
                                  [gamma](std::size_t n) { return 1.0 / (static_cast<double>(n) + gamma); });
}

Decomposition decompose(const RadiusProblem& problem, double a, double r, double eps) {
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) { return decomposition_cesaro(k.beta, a, r, eps); },
                          [&](const op::Bernardi& k) { return decomposition_bernardi(k.gamma, k.m, a, r, eps); },
                          [&](const op::Identity&) {
                              return weighted_decomposition(0, a, r, eps, [](std::size_t) { return 1.0; });
                          },
                      },
                      problem.family);
}

std::vector<double> quadratic_remainder_check(const RadiusProblem& problem, double r,
                                              const std::vector<double>& a_list, double eps) {
    std::vector<double> ratios;
    ratios.reserve(a_list.size());
    for (std::size_t i = 0; i < a_list.size(); ++i) {
        const double a = a_list[i];
        check_a(a, false);
        if (i > 0 && !(a > a_list[i - 1])) {
            throw DomainError("a_list must be strictly increasing");
        }
        const double gap = 1.0 - a;
        ratios.push_back(decompose(problem, a, r, eps).remainder / (gap * gap));
    }
    return ratios;
}

ViolationReport violation_search(const RadiusProblem& problem, double r, double solver_tol) {
    check_r(r);
    const auto solved = solve_radius(problem, std::max(solver_tol, 1e-14));
    ViolationReport report;
    report.radius = solved.root;
    report.r = r;
    if (!(r - solved.root > 10.0 * solver_tol)) {
        throw PreconditionError("violation search needs r beyond the radius " + std::to_string(solved.root) +
                                " by more than 10x the solver tolerance");
    }
    const double bound = closed_bound(problem.family, r);
    double gap = 1.0;
    for (int k = 1; k <= kWitnessScanSteps; ++k) {
        gap *= 0.5;
        const double a = 1.0 - gap;
        const double majorant = extremal_majorant(problem, a, r);
        report.scanned = k;
        if (majorant > bound + kWitnessMargin) {
            report.witness = ViolationWitness{a, k, majorant, bound};
            break;
        }
    }
    return report;
}

double proof_upper_bound(const RadiusProblem& problem, double a, double r) {
    check_r(r);
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) {
                              return ((a * a + a - 1.0) * cesaro_i1(k.beta, r) +
                                      (1.0 - a * a) * cesaro_i2(k.beta, r)) /
                                     r;
                          },
                          [&](const op::Bernardi& k) {
                              const double tail = weighted_tail_sum(k.m, r, problem.series_tail_eps, [&](std::size_t n) {
                                  return 1.0 / (static_cast<double>(n) + k.gamma);
                              });
                              return a * std::pow(r, k.m) / (k.m + k.gamma) + (1.0 - a * a) * tail;
                          },
                          [&](const op::Identity&) { return a + (1.0 - a * a) * r / (1.0 - r); },
                      },
                      problem.family);
}

std::vector<double> uniform_a_grid(int points) {
    if (points < 3) {
        throw DomainError("a grid needs at least 3 points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / points;
    }
    return grid;
}

double concavity_check(const RadiusProblem& problem, double r, const std::vector<double>& a_grid) {
    if (a_grid.size() < 3) {
        throw DomainError("concavity check needs at least 3 grid points");
    }
    std::vector<double> values(a_grid.size());
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        values[i] = proof_upper_bound(problem, a_grid[i], r);
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        worst = std::max(worst, values[i - 1] - 2.0 * values[i] + values[i + 1]);
    }
    return worst;
}

}  // namespace bohr
