#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      ///< worst observed statistic
    double threshold = 0.0;  ///< pass iff worst <= threshold
    int checks = 0;
};

/// Running sums of c_n(beta) against c_n(beta+1), n <= 200, for beta in
/// {0.3, 0.5, 1, 2, 3.7, 10}. The generator is injectable so a corrupted
/// recurrence can be shown to fail.
SuiteResult identity_suite(WeightGenerator generator = &binomial_coeffs);

/// Second differences of the proofs' upper-bound functions in a.
SuiteResult concavity_suite();

/// |a_n| <= 1 - |a_0|^2 on seeded corpus draws with |a_0| < 1.
SuiteResult wiener_suite(std::uint64_t seed, int count);

/// Series vs quadrature at |z| = 0.5 for every operator on seeded draws.
SuiteResult series_quadrature_suite(std::uint64_t seed, int count);

std::vector<SuiteResult> run_selftest(std::uint64_t seed, WeightGenerator generator = &binomial_coeffs);

}  // namespace bohr
