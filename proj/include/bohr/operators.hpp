#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "bohr/corpus.hpp"
#include "bohr/series.hpp"

namespace bohr {

namespace op {

/// T_beta[f](z) = int_0^1 f(tz) (1-tz)^{-beta} dt.
struct CesaroBeta {
    double beta = 1.0;
};
/// C_beta[g](z) = int_0^1 g(tz) / (t (1-tz)^beta) dt for g(0) = 0.
struct CBeta {
    double beta = 1.0;
};
/// L_gamma[g](z) = int_0^1 g(zt) t^{gamma-1} dt for g with an m-fold zero.
struct Bernardi {
    double gamma = 1.0;
    int m = 0;
};
/// Bernardi(1, 0).
struct Libera {};
/// Bernardi(0, 1).
struct Alexander {};
/// I[f](z) = int_0^z f(w) dw = z L[f](z).
struct PrimitiveI {};
/// The function itself; its majorant is the classical Bohr sum.
struct Identity {};

}  // namespace op

using OperatorKind =
    std::variant<op::CesaroBeta, op::CBeta, op::Bernardi, op::Libera, op::Alexander, op::PrimitiveI, op::Identity>;

/// Throws DomainError unless beta > 0 (Cesaro kinds) or gamma > -m, m >= 0
/// (Bernardi).
void validate(const OperatorKind& kind);

/// Libera -> Bernardi(1,0), Alexander -> Bernardi(0,1); other kinds unchanged.
OperatorKind normalize(const OperatorKind& kind);

std::string describe(const OperatorKind& kind);

/// Order of the zero at the origin the operator requires of its input.
int required_leading_zeros(const OperatorKind& kind);

/// (1/r) (1 - (1-r)^{1-beta})/(1-beta), with the log limit near beta = 1.
/// Evaluated through expm1/log1p.
double cesaro_bound(double beta, double r);

/// Sharp bound on |K[f](z)| for |z| = r and f in the class (f in B_0 for
/// CBeta/Alexander, m-fold zero for Bernardi). The same quantity bounds the
/// majorant series inside the Bohr radius.
double operator_bound(const OperatorKind& kind, double r);

/// Taylor coefficients of K[f] up to n_max. Throws TruncationError if
/// f.order() < n_max and PreconditionError if f lacks the required zero.
CoefficientSequence operator_coeffs(const OperatorKind& kind, const CoefficientSequence& f, std::size_t n_max);

inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/// Coefficient order the majorant needs so that the omitted tail, bounded
/// with |a_k| <= 1, is at most eps. Throws TruncationError if that order
/// exceeds max_terms.
std::size_t majorant_order(const OperatorKind& kind, double r, double eps,
                           std::size_t max_terms = kDefaultMaxTerms);

/// Bohr majorant sum of K[f] at radius r (absolute values taken on the
/// input coefficients), accurate to eps. The tail beyond the truncation
/// order is bounded assuming |a_k| <= 1:
///  - Cesaro: A_n <= c_n(beta+1)/(n+1), summed with the geometric envelope
///    of ratio q = r max(1, (N+beta)/(N+1));
///  - Bernardi: r^{N+1}/((N+1+gamma)(1-r)).
double majorant_value(const OperatorKind& kind, const CoefficientSequence& f, double r, double eps,
                      std::size_t max_terms = kDefaultMaxTerms);

/// Same, generating exactly as many coefficients of f as the tail bound needs.
double majorant_value(const OperatorKind& kind, const BoundedFunction& f, double r, double eps,
                      std::size_t max_terms = kDefaultMaxTerms);

/// K[f](z) by Horner evaluation of operator_coeffs, truncated where the
/// majorant tail at |z| drops below eps.
Complex series_value(const OperatorKind& kind, const BoundedFunction& f, Complex z, double eps = 1e-14);

/// K[f](z) from the defining integral, by adaptive Gauss-Kronrod to
/// absolute tolerance tol. Bernardi endpoint singularities (gamma < 1) are
/// removed by splitting off the m-fold zero and, when m + gamma < 1, by the
/// substitution u = t^{m+gamma}.
Complex quadrature_value(const OperatorKind& kind, const BoundedFunction& f, Complex z, double tol);

/// max_k |K[f](z_k)| - operator_bound(kind, r) over `samples` equispaced z_k
/// on |z| = r, starting at z = r.
double sup_bound_check(const OperatorKind& kind, const BoundedFunction& f, double r, int samples,
                       double tol = 1e-10);

/// |M_{C_beta}(z h; r) - r M_{T_beta}(h; r)| where M is the majorant sum.
double cbeta_relation_residual(const BoundedFunction& h, double beta, double r, double eps);

}  // namespace bohr
