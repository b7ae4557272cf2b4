#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// Largest Blaschke zero modulus for which coefficients are produced.
inline constexpr double kBlaschkeRadiusCap = 0.95;

/// A concrete member of the Schur class (analytic on the disk, |f| <= 1),
/// stored structurally so that it can be evaluated exactly and expanded into
/// Taylor coefficients on demand.
class BoundedFunction {
public:
    struct Constant {
        Complex value;
    };
    struct Polynomial {
        std::vector<Complex> coeffs;
    };
    /// factor * prod_j (z - zeros[j]) / (1 - conj(zeros[j]) z) with
    /// |factor| <= 1. A unimodular factor gives a true Blaschke product.
    struct Blaschke {
        std::vector<Complex> zeros;
        Complex factor;
    };
    /// (z - a)/(1 - a z), 0 <= a < 1.
    struct ExtremalPhi {
        double a;
    };
    /// z^m (z - a)/(1 - a z), 0 <= a < 1.
    struct ExtremalPsi {
        double a;
        int m;
    };

    enum class Kind { Constant, Polynomial, Blaschke, ExtremalPhi, ExtremalPsi };

    static BoundedFunction constant(Complex value);
    /// Validates the sup norm on a 4096-point circle grid.
    static BoundedFunction polynomial(std::vector<Complex> coeffs);
    static BoundedFunction blaschke(std::vector<Complex> zeros, Complex factor = {1.0, 0.0});
    /// a == 1 collapses to Constant(-1).
    static BoundedFunction extremal_phi(double a);
    /// a == 1 collapses to the monomial -z^m.
    static BoundedFunction extremal_psi(double a, int m);

    [[nodiscard]] Kind kind() const { return static_cast<Kind>(repr_.index()); }

    template <typename T>
    [[nodiscard]] const T& as() const {
        return std::get<T>(repr_);
    }

    template <typename Visitor>
    decltype(auto) visit(Visitor&& visitor) const {
        return std::visit(std::forward<Visitor>(visitor), repr_);
    }

    /// z^m f(z), kept in structural form.
    [[nodiscard]] BoundedFunction times_z_power(int m) const;

    [[nodiscard]] std::string describe() const;

private:
    using Repr = std::variant<Constant, Polynomial, Blaschke, ExtremalPhi, ExtremalPsi>;
    explicit BoundedFunction(Repr repr) : repr_(std::move(repr)) {}
    Repr repr_;
};

std::string to_string(BoundedFunction::Kind kind);

/// First n_max+1 Taylor coefficients at the origin. Blaschke products are
/// expanded factor by factor through cauchy_product; the extremal families
/// use their closed coefficient law. Throws DomainError if a Blaschke zero
/// has modulus >= kBlaschkeRadiusCap.
CoefficientSequence taylor_coeffs(const BoundedFunction& f, std::size_t n_max);

/// Structural evaluation. Throws DomainError for |z| >= 1.
Complex evaluate(const BoundedFunction& f, Complex z);

/// f(z)/z^m, continuous through z = 0. Requires an m-fold zero at the origin
/// (not checked; the value near 0 comes from the Taylor expansion).
Complex evaluate_deflated(const BoundedFunction& f, Complex z, int m);

/// Truncation order N for which each factor's geometric tail
/// |alpha|^{N+1}/(1-|alpha|) is below eps; orders of the factors add.
std::size_t geometric_tail_order(const BoundedFunction& f, double eps = 1e-15);

/// Seeded corpus draw: 1/4 constants uniform in the closed disk, 3/8 finite
/// Blaschke products with a unimodular factor, 3/8 Blaschke products scaled
/// by a constant uniform in the disk. Zero count is uniform in
/// [0, max_factors]; zeros are uniform in the disk of radius radius_cap.
BoundedFunction random_schur(std::uint64_t seed, int max_factors, double radius_cap);

/// Per-sample seed for corpus sweeps:
/// splitmix64(master ^ splitmix64(index)), where splitmix64 is Vigna's
/// finalizer applied after adding 0x9E3779B97F4A7C15. Serial and parallel
/// sweeps draw identical functions.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// max |f| over grid_size equispaced points on |z| = 1 - 1e-6.
double validate_membership(const BoundedFunction& f, int grid_size);

/// Coefficients of h with g(z) = z^m h(z), order n_max. Throws
/// PreconditionError if any of the first m coefficients exceeds 1e-12.
CoefficientSequence schwarz_factor(const BoundedFunction& g, int m, std::size_t n_max);

/// max over 1 <= n <= N of |a_n| - (1 - |a_0|^2). Nonpositive (up to
/// rounding) for every member of the class with |a_0| < 1.
double wiener_excess(const CoefficientSequence& coeffs);

}  // namespace bohr
