#pragma once

#include <cmath>
#include <complex>

namespace bohr {

/// Compensated accumulator (Kahan-Babuska/Neumaier variant). Unlike plain
/// Kahan it stays exact when an addend is larger than the running sum.
class KahanSum {
public:
    KahanSum& operator+=(double value) {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    [[nodiscard]] double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Componentwise compensated sum of complex addends.
class ComplexKahanSum {
public:
    ComplexKahanSum& operator+=(std::complex<double> value) {
        re_ += value.real();
        im_ += value.imag();
        return *this;
    }

    [[nodiscard]] std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

}  // namespace bohr
