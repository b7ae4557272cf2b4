#include "bohr/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kMembershipSlack = 1e-9;
constexpr double kLeadingZeroTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_extremal_parameter(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw DomainError("extremal parameter a must lie in [0, 1], got " + std::to_string(a));
    }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex uniform_in_disk(std::mt19937_64& rng, double radius) {
    const double rho = radius * std::sqrt(uniform01(rng));
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    return std::polar(rho, theta);
}

Complex integer_power(Complex z, int m) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < m; ++i) {
        out *= z;
    }
    return out;
}

std::size_t order_for_modulus(double modulus, double eps) {
    if (modulus <= 0.0) {
        return 1;
    }
    const double n = std::log(eps * (1.0 - modulus)) / std::log(modulus);
    return static_cast<std::size_t>(std::ceil(std::max(n, 1.0)));
}

}  // namespace

BoundedFunction BoundedFunction::constant(Complex value) {
    if (!(std::abs(value) <= 1.0)) {
        throw DomainError("constant member needs |c| <= 1");
    }
    return BoundedFunction(Constant{value});
}

BoundedFunction BoundedFunction::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
    }
    BoundedFunction f(Polynomial{std::move(coeffs)});
    (void)CoefficientSequence(f.as<Polynomial>().coeffs);  // finiteness check
    if (validate_membership(f, 4096) > 1.0 + kMembershipSlack) {
        throw DomainError("polynomial exceeds modulus 1 on the unit circle");
    }
    return f;
}

BoundedFunction BoundedFunction::blaschke(std::vector<Complex> zeros, Complex factor) {
    if (!(std::abs(factor) <= 1.0 + 1e-15)) {
        throw DomainError("Blaschke factor needs |factor| <= 1");
    }
    for (const auto& alpha : zeros) {
        if (!(std::abs(alpha) < 1.0)) {
            throw DomainError("Blaschke zeros must lie in the open unit disk");
        }
    }
    return BoundedFunction(Blaschke{std::move(zeros), factor});
}

BoundedFunction BoundedFunction::extremal_phi(double a) {
    check_extremal_parameter(a);
    if (a == 1.0) {
        return constant(-1.0);
    }
    return BoundedFunction(ExtremalPhi{a});
}

BoundedFunction BoundedFunction::extremal_psi(double a, int m) {
    check_extremal_parameter(a);
    if (m < 0) {
        throw DomainError("extremal psi needs m >= 0");
    }
    if (a == 1.0) {
        std::vector<Complex> coeffs(static_cast<std::size_t>(m) + 1, Complex{0.0, 0.0});
        coeffs.back() = -1.0;
        return BoundedFunction(Polynomial{std::move(coeffs)});
    }
    return BoundedFunction(ExtremalPsi{a, m});
}

BoundedFunction BoundedFunction::times_z_power(int m) const {
    if (m < 0) {
        throw DomainError("times_z_power needs m >= 0");
    }
    if (m == 0) {
        return *this;
    }
    return visit(Overloaded{
        [m](const Constant& c) {
            return BoundedFunction(Blaschke{std::vector<Complex>(static_cast<std::size_t>(m), 0.0), c.value});
        },
        [m](const Polynomial& p) {
            std::vector<Complex> coeffs(static_cast<std::size_t>(m), 0.0);
            coeffs.insert(coeffs.end(), p.coeffs.begin(), p.coeffs.end());
            return BoundedFunction(Polynomial{std::move(coeffs)});
        },
        [m](const Blaschke& b) {
            auto zeros = b.zeros;
            zeros.insert(zeros.end(), static_cast<std::size_t>(m), Complex{0.0, 0.0});
            return BoundedFunction(Blaschke{std::move(zeros), b.factor});
        },
        [m](const ExtremalPhi& e) { return BoundedFunction(ExtremalPsi{e.a, m}); },
        [m](const ExtremalPsi& e) { return BoundedFunction(ExtremalPsi{e.a, e.m + m}); },
    });
}

std::string BoundedFunction::describe() const {
    std::ostringstream os;
    os.precision(17);
    visit(Overloaded{
        [&](const Constant& c) { os << "Constant(" << c.value << ")"; },
        [&](const Polynomial& p) { os << "Polynomial(degree " << p.coeffs.size() - 1 << ")"; },
        [&](const Blaschke& b) { os << "Blaschke(" << b.zeros.size() << " zeros, factor " << b.factor << ")"; },
        [&](const ExtremalPhi& e) { os << "ExtremalPhi(a=" << e.a << ")"; },
        [&](const ExtremalPsi& e) { os << "ExtremalPsi(a=" << e.a << ", m=" << e.m << ")"; },
    });
    return os.str();
}

std::string to_string(BoundedFunction::Kind kind) {
    switch (kind) {
        case BoundedFunction::Kind::Constant: return "constant";
        case BoundedFunction::Kind::Polynomial: return "polynomial";
        case BoundedFunction::Kind::Blaschke: return "blaschke";
        case BoundedFunction::Kind::ExtremalPhi: return "extremal_phi";
        case BoundedFunction::Kind::ExtremalPsi: return "extremal_psi";
    }
    return "unknown";
}

CoefficientSequence taylor_coeffs(const BoundedFunction& f, std::size_t n_max) {
    using BF = BoundedFunction;
    return f.visit(Overloaded{
        [&](const BF::Constant& c) {
            std::vector<Complex> out(n_max + 1, 0.0);
            out[0] = c.value;
            return CoefficientSequence(std::move(out));
        },
        [&](const BF::Polynomial& p) {
            std::vector<Complex> out(n_max + 1, 0.0);
            std::copy_n(p.coeffs.begin(), std::min(p.coeffs.size(), n_max + 1), out.begin());
            return CoefficientSequence(std::move(out));
        },
        [&](const BF::Blaschke& b) {
            std::vector<Complex> unit(n_max + 1, 0.0);
            unit[0] = b.factor;
            CoefficientSequence product(std::move(unit));
            for (const auto& alpha : b.zeros) {
                if (std::abs(alpha) >= kBlaschkeRadiusCap) {
                    throw DomainError("Blaschke zero modulus " + std::to_string(std::abs(alpha)) +
                                      " is at or beyond the cap " + std::to_string(kBlaschkeRadiusCap));
                }
                std::vector<Complex> linear(n_max + 1, 0.0);
                linear[0] = -alpha;
                if (n_max >= 1) {
                    linear[1] = 1.0;
                }
                const auto factor =
                    cauchy_product(CoefficientSequence(std::move(linear)), geometric_coeffs(std::conj(alpha), n_max), n_max);
                product = cauchy_product(product, factor, n_max);
            }
            return product;
        },
        [&](const BF::ExtremalPhi& e) {
            std::vector<Complex> out(n_max + 1, 0.0);
            out[0] = -e.a;
            double power = 1.0;
            for (std::size_t n = 1; n <= n_max; ++n) {
                out[n] = (1.0 - e.a * e.a) * power;
                power *= e.a;
            }
            return CoefficientSequence(std::move(out));
        },
        [&](const BF::ExtremalPsi& e) {
            const auto m = static_cast<std::size_t>(e.m);
            std::vector<Complex> out(n_max + 1, 0.0);
            if (m <= n_max) {
                out[m] = -e.a;
            }
            double power = 1.0;
            for (std::size_t n = m + 1; n <= n_max; ++n) {
                out[n] = (1.0 - e.a * e.a) * power;
                power *= e.a;
            }
            return CoefficientSequence(std::move(out));
        },
    });
}

Complex evaluate(const BoundedFunction& f, Complex z) {
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("evaluation point must satisfy |z| < 1");
    }
    using BF = BoundedFunction;
    return f.visit(Overloaded{
        [](const BF::Constant& c) { return c.value; },
        [&](const BF::Polynomial& p) { return CoefficientSequence(p.coeffs).horner(z); },
        [&](const BF::Blaschke& b) {
            Complex out = b.factor;
            for (const auto& alpha : b.zeros) {
                out *= (z - alpha) / (1.0 - std::conj(alpha) * z);
            }
            return out;
        },
        [&](const BF::ExtremalPhi& e) { return (z - e.a) / (1.0 - e.a * z); },
        [&](const BF::ExtremalPsi& e) { return integer_power(z, e.m) * (z - e.a) / (1.0 - e.a * z); },
    });
}

Complex evaluate_deflated(const BoundedFunction& f, Complex z, int m) {
    if (m == 0) {
        return evaluate(f, z);
    }
    // Near the origin g(z)/z^m loses digits; sum the Taylor series of h
    // instead. With |h_n| <= 1 the omitted tail is below |z|^13/(1-|z|).
    constexpr double kSeriesRadius = 1e-2;
    constexpr std::size_t kSeriesTerms = 12;
    if (std::abs(z) < kSeriesRadius) {
        const auto coeffs = taylor_coeffs(f, static_cast<std::size_t>(m) + kSeriesTerms);
        return coeffs.shifted_down(static_cast<std::size_t>(m)).horner(z);
    }
    return evaluate(f, z) / integer_power(z, m);
}

std::size_t geometric_tail_order(const BoundedFunction& f, double eps) {
    using BF = BoundedFunction;
    return f.visit(Overloaded{
        [](const BF::Constant&) -> std::size_t { return 0; },
        [](const BF::Polynomial& p) -> std::size_t { return p.coeffs.size() - 1; },
        [&](const BF::Blaschke& b) -> std::size_t {
            std::size_t total = 0;
            for (const auto& alpha : b.zeros) {
                total += order_for_modulus(std::abs(alpha), eps);
            }
            return total;
        },
        [&](const BF::ExtremalPhi& e) -> std::size_t { return order_for_modulus(e.a, eps); },
        [&](const BF::ExtremalPsi& e) -> std::size_t {
            return static_cast<std::size_t>(e.m) + order_for_modulus(e.a, eps);
        },
    });
}

BoundedFunction random_schur(std::uint64_t seed, int max_factors, double radius_cap) {
    if (!(radius_cap > 0.0 && radius_cap <= kBlaschkeRadiusCap)) {
        throw DomainError("radius_cap must lie in (0, 0.95], got " + std::to_string(radius_cap));
    }
    if (max_factors < 0) {
        throw DomainError("max_factors must be nonnegative");
    }
    std::mt19937_64 rng(seed);
    const double kind = uniform01(rng);
    if (kind < 0.25) {
        return BoundedFunction::constant(uniform_in_disk(rng, 1.0));
    }
    const auto count = static_cast<std::size_t>(rng() % (static_cast<std::uint64_t>(max_factors) + 1));
    std::vector<Complex> zeros;
    zeros.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        zeros.push_back(uniform_in_disk(rng, radius_cap));
    }
    Complex factor = std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
    if (kind >= 0.625) {
        factor *= uniform_in_disk(rng, 1.0);
    }
    return BoundedFunction::blaschke(std::move(zeros), factor);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

double validate_membership(const BoundedFunction& f, int grid_size) {
    if (grid_size < 16) {
        throw DomainError("membership grid needs at least 16 points");
    }
    constexpr double kRadius = 1.0 - 1e-6;
    double worst = 0.0;
    for (int k = 0; k < grid_size; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid_size;
        worst = std::max(worst, std::abs(evaluate(f, std::polar(kRadius, theta))));
    }
    return worst;
}

CoefficientSequence schwarz_factor(const BoundedFunction& g, int m, std::size_t n_max) {
    if (m < 0) {
        throw DomainError("schwarz_factor needs m >= 0");
    }
    const auto mm = static_cast<std::size_t>(m);
    const auto coeffs = taylor_coeffs(g, n_max + mm);
    for (std::size_t n = 0; n < mm; ++n) {
        if (std::abs(coeffs[n]) > kLeadingZeroTol) {
            throw PreconditionError("coefficient " + std::to_string(n) + " is nonzero; no " + std::to_string(m) +
                                    "-fold zero at the origin");
        }
    }
    return coeffs.shifted_down(mm);
}

double wiener_excess(const CoefficientSequence& coeffs) {
    const double budget = 1.0 - std::norm(coeffs[0]);
    double worst = -budget;
    for (std::size_t n = 1; n <= coeffs.order(); ++n) {
        worst = std::max(worst, std::abs(coeffs[n]) - budget);
    }
    return worst;
}

}  // namespace bohr
