#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/summation.hpp"

namespace bohr {

CoefficientSequence::CoefficientSequence(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DomainError("coefficient sequence needs at least one entry");
    }
    for (std::size_t n = 0; n < entries_.size(); ++n) {
        if (!std::isfinite(entries_[n].real()) || !std::isfinite(entries_[n].imag())) {
            throw DomainError("coefficient " + std::to_string(n) + " is not finite");
        }
    }
}

CoefficientSequence CoefficientSequence::zeros(std::size_t order) {
    return CoefficientSequence(std::vector<Complex>(order + 1, Complex{0.0, 0.0}));
}

CoefficientSequence CoefficientSequence::truncated(std::size_t n_max) const {
    if (order() < n_max) {
        throw TruncationError("sequence of order " + std::to_string(order()) +
                              " cannot be truncated to order " + std::to_string(n_max));
    }
    return CoefficientSequence({entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)});
}

CoefficientSequence CoefficientSequence::shifted_up(std::size_t k) const {
    std::vector<Complex> out(entries_.size(), Complex{0.0, 0.0});
    for (std::size_t n = k; n < out.size(); ++n) {
        out[n] = entries_[n - k];
    }
    return CoefficientSequence(std::move(out));
}

CoefficientSequence CoefficientSequence::shifted_down(std::size_t k) const {
    if (k > order()) {
        throw TruncationError("cannot divide a sequence of order " + std::to_string(order()) +
                              " by z^" + std::to_string(k));
    }
    return CoefficientSequence({entries_.begin() + static_cast<std::ptrdiff_t>(k), entries_.end()});
}

Complex CoefficientSequence::horner(Complex z) const {
    Complex acc{0.0, 0.0};
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

BinomialWeights binomial_coeffs(double beta, std::size_t n_max) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("binomial weights need beta > 0, got " + std::to_string(beta));
    }
    BinomialWeights out{beta, std::vector<double>(n_max + 1)};
    out.weights[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto nd = static_cast<double>(n);
        out.weights[n] = out.weights[n - 1] * ((nd - 1.0 + beta) / nd);
    }
    return out;
}

CoefficientSequence cauchy_product(const CoefficientSequence& u, const CoefficientSequence& v,
                                   std::size_t n_max) {
    if (u.order() < n_max || v.order() < n_max) {
        throw TruncationError("cauchy_product to order " + std::to_string(n_max) + " needs inputs of order >= " +
                              std::to_string(n_max) + ", got " + std::to_string(u.order()) + " and " +
                              std::to_string(v.order()));
    }
    std::vector<Complex> out(n_max + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n <= n_max; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k <= n; ++k) {
            acc += u[k] * v[n - k];
        }
        out[n] = acc;
    }
    return CoefficientSequence(std::move(out));
}

CoefficientSequence geometric_coeffs(Complex alpha, std::size_t n_max) {
    if (!(std::abs(alpha) < 1.0)) {
        throw DomainError("geometric expansion needs |alpha| < 1");
    }
    std::vector<Complex> out(n_max + 1);
    out[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out[n] = out[n - 1] * alpha;
    }
    return CoefficientSequence(std::move(out));
}

double cumulative_identity_residual(double beta, std::size_t n_max, WeightGenerator generator) {
    const auto lower = generator(beta, n_max);
    const auto upper = generator(beta + 1.0, n_max);
    KahanSum running;
    double worst = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        running += lower.weights[n];
        const double target = upper.weights[n];
        worst = std::max(worst, std::abs(running.value() - target) / std::abs(target));
    }
    return worst;
}

double cumulative_identity_residual(double beta, std::size_t n_max) {
    return cumulative_identity_residual(beta, n_max, &binomial_coeffs);
}

}  // namespace bohr
