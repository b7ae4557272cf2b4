#include "bohr/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/quadrature.hpp"
#include "bohr/summation.hpp"

namespace bohr {

namespace {

constexpr double kLeadingZeroTol = 1e-12;
constexpr double kBetaLimitBand = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("radius must lie in (0, 1), got " + std::to_string(r));
    }
}

void check_eps(double eps) {
    if (!(eps > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
}

void check_leading_zeros(const CoefficientSequence& f, int m) {
    const auto limit = std::min(static_cast<std::size_t>(std::max(m, 0)), f.order() + 1);
    for (std::size_t n = 0; n < limit; ++n) {
        if (std::abs(f[n]) > kLeadingZeroTol) {
            throw PreconditionError("operator input needs a " + std::to_string(m) +
                                    "-fold zero at the origin; coefficient " + std::to_string(n) + " is nonzero");
        }
    }
}

// Smallest N whose Cesaro tail bound at radius r is <= eps.
std::size_t cesaro_order(double beta, double r, double eps, std::size_t max_terms) {
    // w holds c_{N+1}(beta+1) r^{N+1}.
    double w = r * (1.0 + beta);
    for (std::size_t n = 0; n <= max_terms; ++n) {
        const auto nd = static_cast<double>(n);
        const double q = r * std::max(1.0, (nd + beta) / (nd + 1.0));
        if (q < 1.0) {
            const double tail = w / (nd + 2.0) / (1.0 - q);
            if (tail <= eps) {
                return n;
            }
        }
        w *= r * (nd + 2.0 + beta) / (nd + 2.0);
    }
    throw TruncationError("Cesaro majorant tail cannot reach " + std::to_string(eps) + " within " +
                          std::to_string(max_terms) + " terms at r = " + std::to_string(r));
}

std::size_t bernardi_order(double gamma, int m, double r, double eps, std::size_t max_terms) {
    double power = std::pow(r, m + 1);
    for (auto n = static_cast<std::size_t>(m); n <= max_terms; ++n) {
        const double tail = power / ((static_cast<double>(n) + 1.0 + gamma) * (1.0 - r));
        if (tail <= eps) {
            return n;
        }
        power *= r;
    }
    throw TruncationError("Bernardi majorant tail cannot reach " + std::to_string(eps) + " within " +
                          std::to_string(max_terms) + " terms at r = " + std::to_string(r));
}

std::size_t identity_order(double r, double eps, std::size_t max_terms) {
    double power = r;
    for (std::size_t n = 0; n <= max_terms; ++n) {
        if (power / (1.0 - r) <= eps) {
            return n;
        }
        power *= r;
    }
    throw TruncationError("Bohr majorant tail cannot reach " + std::to_string(eps) + " within " +
                          std::to_string(max_terms) + " terms");
}

// sum_{n<=N} r^n (1/(n+1)) sum_{k<=n} c_{n-k}(beta) |a_k|
double cesaro_majorant_sum(double beta, const CoefficientSequence& f, double r, std::size_t order) {
    const auto weights = binomial_coeffs(beta, order).weights;
    std::vector<double> moduli(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        moduli[k] = std::abs(f[k]);
    }
    KahanSum total;
    double power = 1.0;
    for (std::size_t n = 0; n <= order; ++n) {
        KahanSum inner;
        for (std::size_t k = 0; k <= n; ++k) {
            inner += weights[n - k] * moduli[k];
        }
        total += power * inner.value() / static_cast<double>(n + 1);
        power *= r;
    }
    return total.value();
}

double bernardi_majorant_sum(double gamma, int m, const CoefficientSequence& f, double r, std::size_t order) {
    KahanSum total;
    double power = std::pow(r, m);
    for (auto n = static_cast<std::size_t>(m); n <= order; ++n) {
        total += std::abs(f[n]) * power / (static_cast<double>(n) + gamma);
        power *= r;
    }
    return total.value();
}

double bohr_majorant_sum(const CoefficientSequence& f, double r, std::size_t order) {
    KahanSum total;
    double power = 1.0;
    for (std::size_t n = 0; n <= order; ++n) {
        total += std::abs(f[n]) * power;
        power *= r;
    }
    return total.value();
}

Complex integer_power(Complex z, int m) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < m; ++i) {
        out *= z;
    }
    return out;
}

Complex bernardi_quadrature(double gamma, int m, const BoundedFunction& g, Complex z, double tol) {
    check_leading_zeros(taylor_coeffs(g, static_cast<std::size_t>(m)), m);
    if (gamma >= 1.0) {
        auto integrand = [&](double t) { return evaluate(g, z * t) * std::pow(t, gamma - 1.0); };
        return quad::integrate(integrand, 0.0, 1.0, tol).value;
    }
    const double s = static_cast<double>(m) + gamma;
    const Complex zm = integer_power(z, m);
    if (s >= 1.0) {
        // g(zt) t^{gamma-1} = z^m h(zt) t^{s-1}, bounded on [0, 1].
        auto integrand = [&](double t) { return evaluate_deflated(g, z * t, m) * std::pow(t, s - 1.0); };
        return zm * quad::integrate(integrand, 0.0, 1.0, tol / std::max(std::abs(zm), 1e-300)).value;
    }
    // 0 < s < 1: u = t^s turns t^{s-1} dt into du/s.
    auto integrand = [&](double u) { return evaluate_deflated(g, z * std::pow(u, 1.0 / s), m); };
    const Complex scale = zm / s;
    return scale * quad::integrate(integrand, 0.0, 1.0, tol / std::max(std::abs(scale), 1e-300)).value;
}

}  // namespace

void validate(const OperatorKind& kind) {
    std::visit(Overloaded{
                   [](const op::CesaroBeta& k) {
                       if (!(k.beta > 0.0) || !std::isfinite(k.beta)) {
                           throw DomainError("Cesaro operator needs beta > 0, got " + std::to_string(k.beta));
                       }
                   },
                   [](const op::CBeta& k) {
                       if (!(k.beta > 0.0) || !std::isfinite(k.beta)) {
                           throw DomainError("C_beta operator needs beta > 0, got " + std::to_string(k.beta));
                       }
                   },
                   [](const op::Bernardi& k) {
                       if (k.m < 0) {
                           throw DomainError("Bernardi operator needs m >= 0");
                       }
                       if (!(k.gamma > -static_cast<double>(k.m)) || !std::isfinite(k.gamma)) {
                           throw DomainError("Bernardi operator needs gamma > -m, got gamma = " +
                                             std::to_string(k.gamma) + ", m = " + std::to_string(k.m));
                       }
                   },
                   [](const auto&) {},
               },
               kind);
}

OperatorKind normalize(const OperatorKind& kind) {
    return std::visit(Overloaded{
                          [](const op::Libera&) -> OperatorKind { return op::Bernardi{1.0, 0}; },
                          [](const op::Alexander&) -> OperatorKind { return op::Bernardi{0.0, 1}; },
                          [&](const auto&) -> OperatorKind { return kind; },
                      },
                      kind);
}

std::string describe(const OperatorKind& kind) {
    std::ostringstream os;
    os.precision(17);
    std::visit(Overloaded{
                   [&](const op::CesaroBeta& k) { os << "CesaroBeta(beta=" << k.beta << ")"; },
                   [&](const op::CBeta& k) { os << "CBeta(beta=" << k.beta << ")"; },
                   [&](const op::Bernardi& k) { os << "Bernardi(gamma=" << k.gamma << ", m=" << k.m << ")"; },
                   [&](const op::Libera&) { os << "Libera"; },
                   [&](const op::Alexander&) { os << "Alexander"; },
                   [&](const op::PrimitiveI&) { os << "PrimitiveI"; },
                   [&](const op::Identity&) { os << "Identity"; },
               },
               kind);
    return os.str();
}

int required_leading_zeros(const OperatorKind& kind) {
    return std::visit(Overloaded{
                          [](const op::CBeta&) { return 1; },
                          [](const op::Bernardi& k) { return k.m; },
                          [](const op::Alexander&) { return 1; },
                          [](const auto&) { return 0; },
                      },
                      kind);
}

double cesaro_bound(double beta, double r) {
    if (!(beta > 0.0)) {
        throw DomainError("Cesaro bound needs beta > 0");
    }
    check_radius(r);
    const double log1m = std::log1p(-r);
    if (std::abs(1.0 - beta) < kBetaLimitBand) {
        return -log1m / r;
    }
    return -std::expm1((1.0 - beta) * log1m) / ((1.0 - beta) * r);
}

double operator_bound(const OperatorKind& kind, double r) {
    validate(kind);
    check_radius(r);
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) { return cesaro_bound(k.beta, r); },
                          [&](const op::CBeta& k) { return r * cesaro_bound(k.beta, r); },
                          [&](const op::Bernardi& k) { return std::pow(r, k.m) / (k.m + k.gamma); },
                          [&](const op::Libera&) { return 1.0; },
                          [&](const op::Alexander&) { return r; },
                          [&](const op::PrimitiveI&) { return r; },
                          [&](const op::Identity&) { return 1.0; },
                      },
                      kind);
}

CoefficientSequence operator_coeffs(const OperatorKind& raw_kind, const CoefficientSequence& f, std::size_t n_max) {
    validate(raw_kind);
    const auto kind = normalize(raw_kind);
    const auto input = f.truncated(n_max);
    check_leading_zeros(input, required_leading_zeros(kind));
    std::vector<Complex> out(n_max + 1, Complex{0.0, 0.0});

    auto cesaro_into = [&](double beta, const CoefficientSequence& source, std::size_t shift) {
        const std::size_t top = n_max - shift;
        const auto weights = binomial_coeffs(beta, top).weights;
        for (std::size_t n = 0; n <= top; ++n) {
            ComplexKahanSum acc;
            for (std::size_t k = 0; k <= n; ++k) {
                acc += weights[n - k] * source[k];
            }
            out[n + shift] = acc.value() / static_cast<double>(n + 1);
        }
    };

    std::visit(Overloaded{
                   [&](const op::CesaroBeta& k) { cesaro_into(k.beta, input, 0); },
                   [&](const op::CBeta& k) {
                       if (n_max >= 1) {
                           cesaro_into(k.beta, input.shifted_down(1), 1);
                       }
                   },
                   [&](const op::Bernardi& k) {
                       for (auto n = static_cast<std::size_t>(k.m); n <= n_max; ++n) {
                           out[n] = input[n] / (static_cast<double>(n) + k.gamma);
                       }
                   },
                   [&](const op::PrimitiveI&) {
                       for (std::size_t n = 0; n + 1 <= n_max; ++n) {
                           out[n + 1] = input[n] / static_cast<double>(n + 1);
                       }
                   },
                   [&](const op::Identity&) { std::copy(input.entries().begin(), input.entries().end(), out.begin()); },
                   [](const auto&) {},
               },
               kind);
    return CoefficientSequence(std::move(out));
}

std::size_t majorant_order(const OperatorKind& raw_kind, double r, double eps, std::size_t max_terms) {
    validate(raw_kind);
    check_radius(r);
    check_eps(eps);
    const auto kind = normalize(raw_kind);
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) { return cesaro_order(k.beta, r, eps, max_terms); },
                          [&](const op::CBeta& k) { return cesaro_order(k.beta, r, eps / r, max_terms) + 1; },
                          [&](const op::Bernardi& k) { return bernardi_order(k.gamma, k.m, r, eps, max_terms); },
                          [&](const op::PrimitiveI&) { return bernardi_order(1.0, 0, r, eps / r, max_terms); },
                          [&](const op::Identity&) { return identity_order(r, eps, max_terms); },
                          [](const auto&) -> std::size_t { return 0; },
                      },
                      kind);
}

double majorant_value(const OperatorKind& raw_kind, const CoefficientSequence& f, double r, double eps,
                      std::size_t max_terms) {
    const std::size_t order = majorant_order(raw_kind, r, eps, max_terms);
    if (f.order() < order) {
        throw TruncationError("majorant at r = " + std::to_string(r) + " needs coefficients up to order " +
                              std::to_string(order) + ", sequence has order " + std::to_string(f.order()));
    }
    const auto kind = normalize(raw_kind);
    check_leading_zeros(f, required_leading_zeros(kind));
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) { return cesaro_majorant_sum(k.beta, f, r, order); },
                          [&](const op::CBeta& k) {
                              return r * cesaro_majorant_sum(k.beta, f.shifted_down(1), r, order - 1);
                          },
                          [&](const op::Bernardi& k) { return bernardi_majorant_sum(k.gamma, k.m, f, r, order); },
                          [&](const op::PrimitiveI&) { return r * bernardi_majorant_sum(1.0, 0, f, r, order); },
                          [&](const op::Identity&) { return bohr_majorant_sum(f, r, order); },
                          [](const auto&) { return 0.0; },
                      },
                      kind);
}

double majorant_value(const OperatorKind& kind, const BoundedFunction& f, double r, double eps,
                      std::size_t max_terms) {
    const std::size_t order = majorant_order(kind, r, eps, max_terms);
    return majorant_value(kind, taylor_coeffs(f, order), r, eps, max_terms);
}

Complex series_value(const OperatorKind& kind, const BoundedFunction& f, Complex z, double eps) {
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("series evaluation point must satisfy |z| < 1");
    }
    const std::size_t order = majorant_order(kind, std::max(std::abs(z), 1e-2), eps);
    return operator_coeffs(kind, taylor_coeffs(f, order), order).horner(z);
}

Complex quadrature_value(const OperatorKind& raw_kind, const BoundedFunction& f, Complex z, double tol) {
    validate(raw_kind);
    check_eps(tol);
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("quadrature point must satisfy |z| < 1");
    }
    const auto kind = normalize(raw_kind);
    return std::visit(Overloaded{
                          [&](const op::CesaroBeta& k) {
                              auto integrand = [&](double t) {
                                  const Complex w = z * t;
                                  return evaluate(f, w) * std::pow(1.0 - w, -k.beta);
                              };
                              return quad::integrate(integrand, 0.0, 1.0, tol).value;
                          },
                          [&](const op::CBeta& k) {
                              check_leading_zeros(taylor_coeffs(f, 1), 1);
                              // g(tz)/t = z h(tz) with h = g/z.
                              auto integrand = [&](double t) {
                                  const Complex w = z * t;
                                  return z * evaluate_deflated(f, w, 1) * std::pow(1.0 - w, -k.beta);
                              };
                              return quad::integrate(integrand, 0.0, 1.0, tol).value;
                          },
                          [&](const op::Bernardi& k) { return bernardi_quadrature(k.gamma, k.m, f, z, tol); },
                          [&](const op::PrimitiveI&) {
                              const double scale = std::max(std::abs(z), 1e-300);
                              return z * bernardi_quadrature(1.0, 0, f, z, tol / scale);
                          },
                          [&](const op::Identity&) { return evaluate(f, z); },
                          [](const auto&) { return Complex{}; },
                      },
                      kind);
}

double sup_bound_check(const OperatorKind& kind, const BoundedFunction& f, double r, int samples, double tol) {
    check_radius(r);
    if (samples < 8) {
        throw DomainError("sup_bound_check needs at least 8 samples");
    }
    const double bound = operator_bound(kind, r);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / samples);
        worst = std::max(worst, std::abs(quadrature_value(kind, f, z, tol)));
    }
    return worst - bound;
}

double cbeta_relation_residual(const BoundedFunction& h, double beta, double r, double eps) {
    const double lhs = majorant_value(op::CBeta{beta}, h.times_z_power(1), r, eps);
    const double rhs = r * majorant_value(op::CesaroBeta{beta}, h, r, eps);
    return std::abs(lhs - rhs);
}

}  // namespace bohr
