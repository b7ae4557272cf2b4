#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr::quad {

// Gauss-Kronrod 7/15 nodes on [-1, 1]. Odd indices are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <typename T>
struct Result {
    T value{};
    double error = 0.0;
    int panels = 0;
};

template <typename T>
struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    T value{};
    double error = 0.0;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename T, typename F>
Panel<T> kronrod15(F& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T mid = f(centre);
    T kronrod = mid * kKronrodWeights[7];
    T gauss = mid * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T sum = f(centre - dx) + f(centre + dx);
        kronrod += sum * kKronrodWeights[j];
        if (j % 2 == 1) {
            gauss += sum * kGaussWeights[j / 2];
        }
    }
    Panel<T> panel{lo, hi, kronrod * half, 0.0};
    panel.error = std::abs((kronrod - gauss) * half);
    return panel;
}

/// Globally adaptive Gauss-Kronrod 7/15 integration of f over [lo, hi] to
/// absolute tolerance `tol`. The panel with the largest error estimate is
/// bisected until the summed estimate drops below tol. f is never evaluated
/// at the endpoints, so integrable endpoint singularities are tolerated
/// (slowly); callers should remove them by substitution where possible.
///
/// Throws ConvergenceError when `max_panels` is exhausted.
template <typename F>
auto integrate(F&& f, double lo, double hi, double tol, int max_panels = 4000)
    -> Result<decltype(f(0.0))> {
    using T = decltype(f(0.0));
    std::vector<Panel<T>> heap{kronrod15<T>(f, lo, hi)};
    double total_error = heap.front().error;
    int panels = 1;
    while (total_error > tol) {
        if (panels >= max_panels) {
            throw ConvergenceError("adaptive quadrature did not reach tolerance " + std::to_string(tol) +
                                   " within " + std::to_string(max_panels) + " panels (estimate " +
                                   std::to_string(total_error) + ")");
        }
        const Panel<T> worst = heap.front();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            break;  // cannot split further at double precision
        }
        // Error estimates below the rounding floor of the panel value cannot
        // be reduced by further splitting.
        const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(worst.value);
        if (worst.error <= floor) {
            break;
        }
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = kronrod15<T>(f, worst.lo, mid);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(kronrod15<T>(f, mid, worst.hi));
        std::push_heap(heap.begin(), heap.end());
        ++panels;
        // Recomputed rather than updated incrementally so cancellation in the
        // running total cannot stall the loop.
        total_error = 0.0;
        for (const auto& panel : heap) {
            total_error += panel.error;
        }
    }
    Result<T> out;
    out.panels = panels;
    out.error = total_error;
    T acc{};
    for (const auto& panel : heap) {
        acc += panel.value;
    }
    out.value = acc;
    return out;
}

}  // namespace bohr::quad
