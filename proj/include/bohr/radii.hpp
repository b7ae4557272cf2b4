#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "bohr/operators.hpp"

namespace bohr {

/// Which radius equation to solve. Identity is the classical Bohr problem
/// (majorant of f itself against the bound 1, root 1/3).
using RadiusFamily = std::variant<op::CesaroBeta, op::Bernardi, op::Identity>;

struct RadiusProblem {
    RadiusFamily family;
    /// Absolute tail budget for the Bernardi infinite sum.
    double series_tail_eps = 1e-16;
};

struct RadiusResult {
    double root = 0.0;
    double residual = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    int iterations = 0;
};

/// Radius equation attached to an operator: CBeta shares the Cesaro
/// equation, Libera/PrimitiveI reduce to Bernardi(1,0), Alexander to
/// Bernardi(0,1).
RadiusProblem radius_problem_for(const OperatorKind& kind);

/// Right-hand side of the Bohr inequality for the family at radius r.
double closed_bound(const RadiusFamily& family, double r);

/// Cesaro: 3[1-(1-x)^{1-beta}]/(1-beta) - 2[(1-x)^{-beta}-1]/beta, with the
/// limit form 3 log(1/(1-x)) - 2x/(1-x) when |beta-1| < 1e-8.
/// Bernardi: x^m/(m+gamma) - 2 sum_{n>m} x^n/(n+gamma).
/// Identity: 1 - 2x/(1-x).
/// Positive for small x > 0, negative past the root.
double radius_equation(const RadiusProblem& problem, double x);

/// Certified root: a sign-change bracket from a two-sided geometric scan of
/// [1e-6, 1-1e-6], bisected to width <= tol, then a secant polish inside the
/// final bracket. Throws DomainError for tol < 1e-14 and ConvergenceError if
/// no sign change exists.
RadiusResult solve_radius(const RadiusProblem& problem, double tol = 1e-12);

struct CurveRow {
    double param = 0.0;
    RadiusResult result;
};

struct RadiusCurve {
    std::vector<CurveRow> rows;
    /// Adjacent roots moved by less than 10x grid spacing x local slope.
    bool continuous = true;
};

/// Solves one problem per grid value. For a Cesaro base family the grid
/// sweeps beta; for Bernardi it sweeps gamma at the base family's m.
RadiusCurve radius_curve(const RadiusFamily& base, const std::vector<double>& grid, double tol = 1e-12);

}  // namespace bohr
