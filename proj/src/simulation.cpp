#include "sarima/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "sarima/differencing.hpp"
#include "sarima/rng.hpp"

namespace sarima {

namespace {

// Everything the recursion needs from the conditioning data, computed once
// per request so ensembles do not re-difference the series per path.
struct Conditioning {
    std::vector<double> lag_seed;    // newest phi_full.size() differenced values
    std::vector<double> shock_seed;  // newest theta_full.size() residuals
    DifferencingState integ;         // inverts differencing for the continuation
    double mu = 0.0;
};

Conditioning make_conditioning(const FittedModel& fitted) {
    const SarimaModel& model = fitted.model;
    const SarimaOrder& order = model.order;
    DifferenceResult diff =
        difference(fitted.data.values, order.d, order.sd, order.s);
    const std::vector<double>& dx = diff.values;
    const std::size_t p = model.phi_full.size();
    const std::size_t q = model.theta_full.size();
    if (fitted.residuals.size() != dx.size()) {
        throw std::runtime_error(
            "state mismatch: residuals do not align with the differenced "
            "series");
    }
    if (dx.size() < p || fitted.residuals.size() < q) {
        throw std::runtime_error(
            "series too short: cannot seed " + std::to_string(p) +
            " lags and " + std::to_string(q) + " shocks");
    }
    Conditioning cond;
    cond.lag_seed.assign(dx.end() - p, dx.end());
    cond.shock_seed.assign(fitted.residuals.end() - q, fitted.residuals.end());
    cond.integ = continuation_state(fitted.data.values, order.d, order.sd,
                                    order.s);
    cond.mu = intercept_from_mean(model);
    return cond;
}

std::vector<double> run_recursion(const Conditioning& cond,
                                  const SarimaModel& model, int m,
                                  std::span<const double> innovations) {
    const auto& phi = model.phi_full;
    const auto& theta = model.theta_full;
    const std::size_t p = phi.size();
    const std::size_t q = theta.size();
    std::vector<double> x(p + static_cast<std::size_t>(m));
    std::copy(cond.lag_seed.begin(), cond.lag_seed.end(), x.begin());
    std::vector<double> e(q + static_cast<std::size_t>(m));
    std::copy(cond.shock_seed.begin(), cond.shock_seed.end(), e.begin());
    std::copy(innovations.begin(), innovations.end(), e.begin() + q);

    for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
        double v = cond.mu + e[q + k];
        for (std::size_t j = 0; j < q; ++j) {
            v += theta[j] * e[q + k - 1 - j];
        }
        for (std::size_t i = 0; i < p; ++i) {
            v += phi[i] * x[p + k - 1 - i];
        }
        x[p + k] = v;
    }
    return integrate(std::span<const double>(x).subspan(p), cond.integ);
}

void check_horizon(int m) {
    if (m < 1) {
        throw std::invalid_argument("horizon must be >= 1");
    }
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

std::vector<double> simulate_path(const FittedModel& fitted, int m,
                                  std::span<const double> innovations) {
    check_horizon(m);
    if (innovations.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("need exactly one innovation per horizon");
    }
    return run_recursion(make_conditioning(fitted), fitted.model, m,
                         innovations);
}

std::vector<double> forecast(const FittedModel& fitted, int m) {
    check_horizon(m);
    const std::vector<double> zeros(static_cast<std::size_t>(m), 0.0);
    return simulate_path(fitted, m, zeros);
}

SimulationEnsemble simulate_ensemble(const FittedModel& fitted,
                                     const SimulationRequest& request,
                                     int n_threads) {
    check_horizon(request.horizon);
    if (request.n_paths < 1) {
        throw std::invalid_argument("n_paths must be >= 1");
    }
    const int m = request.horizon;
    const int n = request.zero_innovations ? 1 : request.n_paths;

    const Conditioning cond = make_conditioning(fitted);
    const SarimaModel& model = fitted.model;
    const double innovation_sd = std::sqrt(model.sigma2);

    SimulationEnsemble ens;
    ens.horizon = m;
    ens.n_paths = n;
    ens.paths.resize(static_cast<std::size_t>(m) * n);
    ens.start = fitted.data.end_time();
    ens.frequency = fitted.data.frequency;
    ens.seed_used = request.seed ? *request.seed : entropy_seed();

    auto run_block = [&](int first, int last) {
        std::vector<double> innovations(static_cast<std::size_t>(m), 0.0);
        for (int j = first; j < last; ++j) {
            if (!request.zero_innovations) {
                SubstreamRng rng(ens.seed_used, static_cast<std::uint64_t>(j));
                for (double& v : innovations) {
                    v = innovation_sd * rng.next_normal();
                }
            }
            const std::vector<double> path =
                run_recursion(cond, model, m, innovations);
            for (int h = 0; h < m; ++h) {
                ens.paths[static_cast<std::size_t>(h) * n + j] = path[h];
            }
        }
    };

    int workers = n_threads > 0
                      ? n_threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, n);
    if (workers == 1) {
        run_block(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int first = w * chunk;
            const int last = std::min(n, first + chunk);
            if (first < last) {
                pool.emplace_back(run_block, first, last);
            }
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    ens.mean.resize(m);
    ens.sd.resize(m);
    for (int h = 0; h < m; ++h) {
        const double* row = ens.paths.data() + static_cast<std::size_t>(h) * n;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += row[j];
        }
        const double mean = acc / n;
        double var = 0.0;
        for (int j = 0; j < n; ++j) {
            var += (row[j] - mean) * (row[j] - mean);
        }
        ens.mean[h] = mean;
        ens.sd[h] = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
    }
    return ens;
}

QuantileTable ensemble_summary(const SimulationEnsemble& ensemble,
                               std::span<const double> quantiles) {
    for (double q : quantiles) {
        if (!(q > 0.0 && q < 1.0)) {
            throw std::invalid_argument(
                "quantile probabilities must lie in (0, 1)");
        }
    }
    QuantileTable table;
    table.probabilities.assign(quantiles.begin(), quantiles.end());
    table.values.resize(static_cast<std::size_t>(ensemble.horizon) *
                        quantiles.size());
    const int n = ensemble.n_paths;
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int h = 0; h < ensemble.horizon; ++h) {
        const double* src =
            ensemble.paths.data() + static_cast<std::size_t>(h) * n;
        row.assign(src, src + n);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < quantiles.size(); ++i) {
            const double pos = quantiles[i] * (n - 1);
            const std::size_t lo = static_cast<std::size_t>(pos);
            const std::size_t hi = std::min(lo + 1, row.size() - 1);
            const double frac = pos - static_cast<double>(lo);
            table.values[static_cast<std::size_t>(h) * quantiles.size() + i] =
                row[lo] + frac * (row[hi] - row[lo]);
        }
    }
    return table;
}

}  // namespace sarima
