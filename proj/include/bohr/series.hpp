#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Truncated Taylor coefficients a_0..a_N of a function analytic in the unit
/// disk. The truncation order N is explicit and never changes after
/// construction; all entries are finite.
class CoefficientSequence {
public:
    /// Throws DomainError when `entries` is empty or contains NaN/Inf.
    explicit CoefficientSequence(std::vector<Complex> entries);

    /// a_0 = ... = a_N = 0.
    static CoefficientSequence zeros(std::size_t order);

    [[nodiscard]] std::size_t order() const { return entries_.size() - 1; }
    [[nodiscard]] std::span<const Complex> entries() const { return entries_; }
    [[nodiscard]] const Complex& operator[](std::size_t n) const { return entries_[n]; }

    /// First n_max+1 coefficients. Throws TruncationError if order() < n_max.
    [[nodiscard]] CoefficientSequence truncated(std::size_t n_max) const;

    /// Coefficients of z^k f(z), keeping the same truncation order (the top k
    /// entries fall off).
    [[nodiscard]] CoefficientSequence shifted_up(std::size_t k) const;

    /// Coefficients of f(z)/z^k; the order drops by k. Leading entries are
    /// discarded without checking, callers validate the zero first.
    [[nodiscard]] CoefficientSequence shifted_down(std::size_t k) const;

    /// Horner evaluation of the truncated polynomial.
    [[nodiscard]] Complex horner(Complex z) const;

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    std::vector<Complex> entries_;
};

/// Taylor coefficients c_n(beta) = Gamma(n+beta)/(Gamma(n+1)Gamma(beta)) of
/// (1-x)^(-beta).
struct BinomialWeights {
    double beta = 1.0;
    std::vector<double> weights;
};

/// c_0..c_{n_max} by the recurrence c_n = c_{n-1}(n-1+beta)/n. Throws
/// DomainError for beta <= 0 or non-finite beta.
BinomialWeights binomial_coeffs(double beta, std::size_t n_max);

/// Truncated Cauchy product: result[n] = sum_{k<=n} u[k] v[n-k], n <= n_max.
/// Throws TruncationError if either input has order < n_max.
CoefficientSequence cauchy_product(const CoefficientSequence& u, const CoefficientSequence& v,
                                   std::size_t n_max);

/// 1, alpha, alpha^2, ..., alpha^{n_max}: the expansion of 1/(1 - alpha z).
/// Throws DomainError for |alpha| >= 1.
CoefficientSequence geometric_coeffs(Complex alpha, std::size_t n_max);

/// Largest relative gap, over n <= n_max, between the running sum
/// c_0(beta) + ... + c_n(beta) and c_n(beta+1).
double cumulative_identity_residual(double beta, std::size_t n_max);

/// Same check against an arbitrary weight generator; lets the selftest
/// harness run the identity suite on a deliberately corrupted recurrence.
using WeightGenerator = BinomialWeights (*)(double, std::size_t);
double cumulative_identity_residual(double beta, std::size_t n_max, WeightGenerator generator);

}  // namespace bohr
