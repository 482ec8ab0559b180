#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sarima {

// Coefficients of a backshift polynomial; coeffs[k-1] multiplies B^k.
// AR polynomials stand for 1 - sum_k c_k B^k, MA polynomials for
// 1 + sum_k c_k B^k. This sign convention is fixed here and consumed
// unchanged by estimation and simulation.
struct LagPolynomial {
    std::vector<double> coeffs;

    // Drop trailing zero coefficients.
    void canonicalize();

    // Highest lag with a non-zero coefficient (0 for the constant polynomial).
    std::size_t degree() const;

    double eval_ar(double z) const;  // 1 - sum c_k z^k
    double eval_ma(double z) const;  // 1 + sum c_k z^k
};

// Multiply the non-seasonal and seasonal AR factors into a single
// coefficient vector c of length phi.size() + s * sphi.size():
//
//   1 - sum_k c_k B^k = (1 - sum_i phi_i B^i) (1 - sum_j sphi_j B^(j*s))
//
// so the interaction lag i + j*s picks up -phi_i * sphi_j.
std::vector<double> expand_ar(std::span<const double> phi,
                              std::span<const double> sphi, int s);

// MA counterpart:
//
//   1 + sum_k c_k B^k = (1 + sum_i theta_i B^i) (1 + sum_j stheta_j B^(j*s))
//
// with +theta_i * stheta_j at the interaction lags.
std::vector<double> expand_ma(std::span<const double> theta,
                              std::span<const double> stheta, int s);

// Schur-Cohn test via the Levinson down-recursion: true when
// 1 - sum_k c_k z^k has all roots strictly outside the unit circle.
bool roots_outside_unit_circle(std::span<const double> c);

}  // namespace sarima
