#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sarima/model.hpp"

namespace sarima {

struct FitConfig {
    int max_iterations = 500;
    // Stop when the simplex objective spread falls below
    // tolerance * (|best| + tolerance).
    double tolerance = 1e-8;
    // Defaults to true iff d = sd = 0.
    std::optional<bool> include_mean;
    // Explicit start, packed as [phi, theta, sphi, stheta, mean?].
    std::optional<std::vector<double>> initial_coefficients;
};

// Residuals of the conditional (pre-sample shocks zero) recursion
//
//   e_t = dx_t - mu - sum_i phi_full_i dx_{t-i} - sum_j theta_full_j e_{t-j}
//
// emitted for t >= phi_full.size() and zero-padded at the front so the
// result aligns with dx element by element.
std::vector<double> css_residuals(const SarimaModel& model,
                                  std::span<const double> dx);

// Conditional sum of squares over the emitted residuals.
double css_objective(const SarimaModel& model, std::span<const double> dx);

// Minimizes the conditional sum of squares over the coefficients (and the
// mean, when included) with a Nelder-Mead simplex search. Start values:
// sample mean of the differenced series, Yule-Walker for the AR parts,
// zero for the MA parts.
FittedModel fit(const TimeSeries& data, const SarimaOrder& order,
                const FitConfig& cfg = {});

// Builds a FittedModel from externally supplied coefficients without any
// optimization; residuals and fit statistics come from the CSS recursion.
FittedModel load_model(const SarimaOrder& order, std::span<const double> phi,
                       std::span<const double> theta,
                       std::span<const double> sphi,
                       std::span<const double> stheta,
                       std::optional<double> mean, double sigma2,
                       const TimeSeries& data);

}  // namespace sarima
