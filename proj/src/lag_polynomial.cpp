#include "sarima/lag_polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace sarima {

void LagPolynomial::canonicalize() {
    while (!coeffs.empty() && coeffs.back() == 0.0) {
        coeffs.pop_back();
    }
}

std::size_t LagPolynomial::degree() const {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0.0) {
        --deg;
    }
    return deg;
}

double LagPolynomial::eval_ar(double z) const {
    double acc = 1.0;
    double zk = 1.0;
    for (double c : coeffs) {
        zk *= z;
        acc -= c * zk;
    }
    return acc;
}

double LagPolynomial::eval_ma(double z) const {
    double acc = 1.0;
    double zk = 1.0;
    for (double c : coeffs) {
        zk *= z;
        acc += c * zk;
    }
    return acc;
}

namespace {

// Shared product kernel: `sign` is -1 for AR factors and +1 for MA factors,
// matching the interaction-term sign in the expanded polynomial.
std::vector<double> expand(std::span<const double> nonseasonal,
                           std::span<const double> seasonal, int s,
                           double sign) {
    if (s < 1) {
        throw std::invalid_argument("lag polynomial expansion: season length must be >= 1");
    }
    const std::size_t p = nonseasonal.size();
    const std::size_t sp = seasonal.size();
    std::vector<double> full(p + static_cast<std::size_t>(s) * sp, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        full[i] = nonseasonal[i];
    }
    for (std::size_t j = 0; j < sp; ++j) {
        const std::size_t js = (j + 1) * static_cast<std::size_t>(s);
        full[js - 1] += seasonal[j];
        for (std::size_t i = 0; i < p; ++i) {
            full[js + i] += sign * nonseasonal[i] * seasonal[j];
        }
    }
    return full;
}

}  // namespace

std::vector<double> expand_ar(std::span<const double> phi,
                              std::span<const double> sphi, int s) {
    return expand(phi, sphi, s, -1.0);
}

std::vector<double> expand_ma(std::span<const double> theta,
                              std::span<const double> stheta, int s) {
    return expand(theta, stheta, s, +1.0);
}

bool roots_outside_unit_circle(std::span<const double> c) {
    std::vector<double> a(c.begin(), c.end());
    // Trim trailing zeros so the reflection recursion sees the true degree.
    while (!a.empty() && a.back() == 0.0) {
        a.pop_back();
    }
    while (!a.empty()) {
        const double r = a.back();
        if (!(std::fabs(r) < 1.0)) {
            return false;
        }
        const std::size_t p = a.size() - 1;
        std::vector<double> next(p);
        const double denom = 1.0 - r * r;
        for (std::size_t i = 0; i < p; ++i) {
            next[i] = (a[i] + r * a[p - 1 - i]) / denom;
        }
        a = std::move(next);
    }
    return true;
}

}  // namespace sarima
