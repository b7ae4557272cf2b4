#pragma once

#include <optional>
#include <vector>

#include "bohr/corpus.hpp"
#include "bohr/radii.hpp"

namespace bohr {

/// Three-term split of the extremal majorant at radius r:
///   total = bound_term - deficit_term + remainder,
/// where bound_term is the Bohr bound, deficit_term is (1-a) times the
/// radius equation (scaled by 1/r for the Cesaro family) and remainder is
/// O((1-a)^2) as a -> 1.
struct Decomposition {
    double bound_term = 0.0;
    double deficit_term = 0.0;
    double remainder = 0.0;
    double total = 0.0;
};

/// phi_a for the Cesaro and classical problems, psi_{a,m} for Bernardi.
BoundedFunction extremal_function(const RadiusProblem& problem, double a);

/// Majorant of the extremal function, summed directly from its coefficients.
double extremal_majorant(const RadiusProblem& problem, double a, double r, double eps = 1e-14);

/// T_beta majorant of phi_a. The remainder N_a(r) is evaluated from its
/// integral form
///   2(1-a)/r [I_1 - I_2] + (1-a^2)/r int_0^r t/((1-at)(1-t)^beta) dt
/// with I_1 = int_0^r (1-t)^{-beta}, I_2 = int_0^r (1-t)^{-beta-1}.
Decomposition decomposition_cesaro(double beta, double a, double r, double eps = 1e-14);

/// L_gamma majorant of psi_{a,m}. The remainder is the series
///   sum_{n>m} [2(a-1) + (1-a^2) a^{n-m-1}] r^n/(n+gamma).
Decomposition decomposition_bernardi(double gamma, int m, double a, double r, double eps = 1e-14);

/// Dispatch on the problem family; Identity uses the classical Bohr split
/// (Bernardi form with unit weights).
Decomposition decompose(const RadiusProblem& problem, double a, double r, double eps = 1e-14);

/// remainder(a)/(1-a)^2 for each a. a_list must be strictly increasing
/// and below 1.
std::vector<double> quadratic_remainder_check(const RadiusProblem& problem, double r,
                                              const std::vector<double>& a_list, double eps = 1e-14);

struct ViolationWitness {
    double a = 0.0;
    int k = 0;  ///< a = 1 - 2^-k
    double majorant = 0.0;
    double bound = 0.0;
};

struct ViolationReport {
    double radius = 0.0;  ///< solved root of the problem
    double r = 0.0;
    int scanned = 0;
    std::optional<ViolationWitness> witness;
};

/// Scans a = 1 - 2^-k, k = 1..40, for an extremal function whose majorant
/// exceeds the closed bound by more than 1e-12. Requires r to exceed the
/// solved radius by more than 10x the solver tolerance (PreconditionError
/// otherwise).
ViolationReport violation_search(const RadiusProblem& problem, double r, double solver_tol = 1e-12);

/// Upper-bound function of the proofs, as a function of a = |a_0|:
/// Cesaro phi(a) = (1/r)[(a^2+a-1) I_1 + (1-a^2) I_2];
/// Bernardi psi(a) = a r^m/(m+gamma) + (1-a^2) sum_{n>m} r^n/(n+gamma);
/// classical a + (1-a^2) r/(1-r).
double proof_upper_bound(const RadiusProblem& problem, double a, double r);

/// points values i/points, i = 0..points-1.
std::vector<double> uniform_a_grid(int points);

/// Maximum centred second difference of proof_upper_bound over a_grid.
double concavity_check(const RadiusProblem& problem, double r, const std::vector<double>& a_grid);

}  // namespace bohr
