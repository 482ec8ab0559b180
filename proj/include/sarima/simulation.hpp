#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sarima/model.hpp"

namespace sarima {

struct SimulationRequest {
    int horizon = 1;
    int n_paths = 1;
    // Absent: seeded from std::random_device (not reproducible).
    std::optional<std::uint64_t> seed;
    // Produces the forecast path; forces n_paths = 1.
    bool zero_innovations = false;
};

// Simulated continuations on the original (undifferenced) scale.
// paths is row-major: paths[h * n_paths + j] is horizon h of path j.
struct SimulationEnsemble {
    int horizon = 0;
    int n_paths = 0;
    std::vector<double> paths;
    std::vector<double> mean;  // per horizon
    std::vector<double> sd;    // per horizon, sample standard deviation
    double start = 0.0;        // time of horizon 1
    int frequency = 1;
    std::uint64_t seed_used = 0;

    double at(int h, int j) const {
        return paths[static_cast<std::size_t>(h) * n_paths + j];
    }
    double time_at(int h) const {
        return start + static_cast<double>(h) / frequency;
    }
};

// One continuation of the observed series, driven by the supplied
// innovations (one per future step). The differenced continuation follows
// the model recursion seeded with the newest differenced observations and
// the newest residuals, then integrates back to the original scale.
// Deterministic given the innovations.
std::vector<double> simulate_path(const FittedModel& fitted, int m,
                                  std::span<const double> innovations);

// The conditional-expectation forecast: simulate_path with all innovations
// zero. There is no separate forecasting code path.
std::vector<double> forecast(const FittedModel& fitted, int m);

// n_paths independent continuations with innovations drawn from
// N(0, sigma2). Each path draws from its own substream keyed by
// (seed, path index), so results are bit-identical for any thread count.
// n_threads = 0 picks the hardware concurrency.
SimulationEnsemble simulate_ensemble(const FittedModel& fitted,
                                     const SimulationRequest& request,
                                     int n_threads = 0);

// Per-horizon empirical quantiles, linearly interpolated order statistics.
struct QuantileTable {
    std::vector<double> probabilities;
    std::vector<double> values;  // row-major, horizon x probabilities

    double at(int h, std::size_t i) const {
        return values[static_cast<std::size_t>(h) * probabilities.size() + i];
    }
};

QuantileTable ensemble_summary(const SimulationEnsemble& ensemble,
                               std::span<const double> quantiles);

}  // namespace sarima
