#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sarima/time_series.hpp"

namespace sarima {

// Model orders (p, d, q)(P, D, Q)_s. s is ignored when all seasonal orders
// are zero.
struct SarimaOrder {
    int p = 0, d = 0, q = 0;     // non-seasonal AR / difference / MA
    int sp = 0, sd = 0, sq = 0;  // seasonal AR / difference / MA
    int s = 1;                   // season length

    void validate() const;
    bool is_seasonal() const { return sp > 0 || sd > 0 || sq > 0; }
    int n_coefficients() const { return p + q + sp + sq; }
};

// Estimated SARIMA parameters. The recursion below consumes only the
// expanded full-lag vectors, which are always recomputed from the factor
// polynomials (never edited directly):
//
//   x_t = mu + sum_i phi_full_i x_{t-i} + eps_t + sum_j theta_full_j eps_{t-j}
//
// MA coefficients enter with a PLUS sign. Textbooks differ on this; every
// coefficient stored here follows the plus convention.
struct SarimaModel {
    SarimaOrder order;
    std::vector<double> phi;     // p non-seasonal AR coefficients
    std::vector<double> theta;   // q non-seasonal MA coefficients
    std::vector<double> sphi;    // sp seasonal AR coefficients
    std::vector<double> stheta;  // sq seasonal MA coefficients
    std::optional<double> mean;  // process mean of the differenced series;
                                 // present only when d = sd = 0
    double sigma2 = 1.0;         // innovation variance
    std::vector<double> phi_full;    // p + s*sp expanded AR coefficients
    std::vector<double> theta_full;  // q + s*sq expanded MA coefficients

    // Validates orders, coefficient lengths, sigma2 > 0 and the mean/
    // differencing exclusion, then fills phi_full/theta_full.
    static SarimaModel make(const SarimaOrder& order, std::vector<double> phi,
                            std::vector<double> theta, std::vector<double> sphi,
                            std::vector<double> stheta,
                            std::optional<double> mean, double sigma2);

    void rebuild_expansions();
};

// Constant term of the recursion: mu = mean * (1 - sum_i phi_full_i).
// Models without a mean (differenced models) have no intercept.
double intercept_from_mean(const SarimaModel& model);

struct FitInfo {
    std::string method;  // optimizer used, or "frozen" for loaded coefficients
    int iterations = 0;
    bool converged = true;
    std::vector<std::string> warnings;
};

// A model tied to the series it conditions on. residuals align with the
// differenced series element by element (the first phi_full.size() entries
// are zero padding, before any residual can be emitted).
struct FittedModel {
    SarimaModel model;
    TimeSeries data;
    std::vector<double> residuals;
    double loglik_css = 0.0;
    double aic = 0.0;
    FitInfo fit;
};

}  // namespace sarima
