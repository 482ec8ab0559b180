#include "sarima/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sarima/differencing.hpp"
#include "sarima/lag_polynomial.hpp"

namespace sarima {

std::vector<double> css_residuals(const SarimaModel& model,
                                  std::span<const double> dx) {
    const auto& phi = model.phi_full;
    const auto& theta = model.theta_full;
    const std::size_t p = phi.size();
    const std::size_t q = theta.size();
    const std::size_t n = dx.size();
    if (n <= p) {
        throw std::runtime_error(
            "series too short: differenced series must be longer than the "
            "expanded AR order");
    }
    const double mu = intercept_from_mean(model);
    std::vector<double> e(n, 0.0);
    for (std::size_t t = p; t < n; ++t) {
        double v = dx[t] - mu;
        for (std::size_t i = 0; i < p; ++i) {
            v -= phi[i] * dx[t - 1 - i];
        }
        for (std::size_t j = 0; j < q && j < t; ++j) {
            v -= theta[j] * e[t - 1 - j];
        }
        e[t] = v;
    }
    return e;
}

double css_objective(const SarimaModel& model, std::span<const double> dx) {
    const std::vector<double> e = css_residuals(model, dx);
    const std::size_t p = model.phi_full.size();
    double ssq = 0.0;
    for (std::size_t t = p; t < e.size(); ++t) {
        ssq += e[t] * e[t];
    }
    return ssq;
}

namespace {

constexpr double kSigma2Floor = 1e-12;

std::vector<double> sample_acf(std::span<const double> x, int max_lag) {
    const std::size_t n = x.size();
    std::vector<double> acf(static_cast<std::size_t>(max_lag) + 1, 0.0);
    acf[0] = 1.0;
    if (n == 0) {
        return acf;
    }
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) /
                        static_cast<double>(n);
    double var = 0.0;
    for (double v : x) {
        var += (v - mean) * (v - mean);
    }
    if (var <= 0.0) {
        return acf;
    }
    for (int k = 1; k <= max_lag; ++k) {
        double cov = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) {
            cov += (x[t] - mean) * (x[t - k] - mean);
        }
        acf[k] = cov / var;
    }
    return acf;
}

// Levinson-Durbin on an autocorrelation sequence rho_0 = 1, rho_1..rho_p.
std::vector<double> levinson_durbin(const std::vector<double>& rho, int p) {
    std::vector<double> a;
    double err = 1.0;
    for (int k = 1; k <= p; ++k) {
        double acc = rho[k];
        for (int i = 0; i < k - 1; ++i) {
            acc -= a[i] * rho[k - 1 - i];
        }
        if (err <= 1e-12) {
            a.assign(p, 0.0);
            return a;
        }
        const double kappa = acc / err;
        std::vector<double> next(k);
        for (int i = 0; i < k - 1; ++i) {
            next[i] = a[i] - kappa * a[k - 2 - i];
        }
        next[k - 1] = kappa;
        a = std::move(next);
        err *= 1.0 - kappa * kappa;
    }
    a.resize(p, 0.0);
    return a;
}

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = true;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const std::vector<double>& steps,
    int max_iterations, double tolerance) {
    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += steps[i];
    }
    std::vector<double> fvals(dim + 1);
    for (std::size_t v = 0; v <= dim; ++v) {
        fvals[v] = f(simplex[v]);
    }

    auto order = [&] {
        std::vector<std::size_t> idx(dim + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return fvals[a] < fvals[b];
        });
        std::vector<std::vector<double>> sx(dim + 1);
        std::vector<double> sf(dim + 1);
        for (std::size_t k = 0; k <= dim; ++k) {
            sx[k] = std::move(simplex[idx[k]]);
            sf[k] = fvals[idx[k]];
        }
        simplex = std::move(sx);
        fvals = std::move(sf);
    };

    NelderMeadResult result;
    result.converged = false;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        order();
        if (fvals[dim] - fvals[0] <=
            tolerance * (std::fabs(fvals[0]) + tolerance)) {
            result.converged = true;
            break;
        }
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t i = 0; i < dim; ++i) {
                centroid[i] += simplex[v][i];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(dim);
        }

        auto point = [&](double coef) {
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                p[i] = centroid[i] + coef * (centroid[i] - simplex[dim][i]);
            }
            return p;
        };

        std::vector<double> reflected = point(1.0);
        const double fr = f(reflected);
        if (fr < fvals[0]) {
            std::vector<double> expanded = point(2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[dim] = std::move(expanded);
                fvals[dim] = fe;
            } else {
                simplex[dim] = std::move(reflected);
                fvals[dim] = fr;
            }
        } else if (fr < fvals[dim - 1]) {
            simplex[dim] = std::move(reflected);
            fvals[dim] = fr;
        } else {
            const bool outside = fr < fvals[dim];
            std::vector<double> contracted = point(outside ? 0.5 : -0.5);
            const double fc = f(contracted);
            if (fc < (outside ? fr : fvals[dim])) {
                simplex[dim] = std::move(contracted);
                fvals[dim] = fc;
            } else {
                for (std::size_t v = 1; v <= dim; ++v) {
                    for (std::size_t i = 0; i < dim; ++i) {
                        simplex[v][i] =
                            simplex[0][i] + 0.5 * (simplex[v][i] - simplex[0][i]);
                    }
                    fvals[v] = f(simplex[v]);
                }
            }
        }
    }
    order();
    result.x = simplex[0];
    result.fx = fvals[0];
    result.iterations = iter;
    return result;
}

struct ParameterPacking {
    SarimaOrder order;
    bool include_mean = false;

    std::size_t size() const {
        return static_cast<std::size_t>(order.n_coefficients()) +
               (include_mean ? 1 : 0);
    }

    SarimaModel unpack(const std::vector<double>& params,
                       double sigma2) const {
        auto it = params.begin();
        std::vector<double> phi(it, it + order.p);
        it += order.p;
        std::vector<double> theta(it, it + order.q);
        it += order.q;
        std::vector<double> sphi(it, it + order.sp);
        it += order.sp;
        std::vector<double> stheta(it, it + order.sq);
        it += order.sq;
        std::optional<double> mean;
        if (include_mean) {
            mean = *it;
        }
        return SarimaModel::make(order, std::move(phi), std::move(theta),
                                 std::move(sphi), std::move(stheta), mean,
                                 sigma2);
    }
};

double sample_sd(std::span<const double> x) {
    if (x.size() < 2) {
        return 0.0;
    }
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) /
                        static_cast<double>(x.size());
    double var = 0.0;
    for (double v : x) {
        var += (v - mean) * (v - mean);
    }
    return std::sqrt(var / static_cast<double>(x.size() - 1));
}

void add_diagnostic_warnings(FittedModel& fitted) {
    if (!roots_outside_unit_circle(fitted.model.phi_full)) {
        fitted.fit.warnings.push_back("ar-polynomial-not-stationary");
    }
    std::vector<double> neg_theta(fitted.model.theta_full);
    for (double& v : neg_theta) {
        v = -v;
    }
    if (!roots_outside_unit_circle(neg_theta)) {
        fitted.fit.warnings.push_back("ma-polynomial-not-invertible");
    }
}

void finish_fit_statistics(FittedModel& fitted,
                           std::span<const double> dx, int n_parameters) {
    fitted.residuals = css_residuals(fitted.model, dx);
    const std::size_t p = fitted.model.phi_full.size();
    const double n_eff = static_cast<double>(dx.size() - p);
    fitted.loglik_css =
        -0.5 * n_eff *
        (std::log(2.0 * 3.14159265358979323846 * fitted.model.sigma2) + 1.0);
    fitted.aic = -2.0 * fitted.loglik_css + 2.0 * (n_parameters + 1);
}

}  // namespace

FittedModel fit(const TimeSeries& data, const SarimaOrder& order,
                const FitConfig& cfg) {
    order.validate();
    if (cfg.max_iterations < 1 || !(cfg.tolerance > 0.0)) {
        throw std::invalid_argument("fit config: max_iterations >= 1 and tolerance > 0 required");
    }
    const bool include_mean =
        cfg.include_mean.value_or(order.d == 0 && order.sd == 0);
    if (include_mean && (order.d > 0 || order.sd > 0)) {
        throw std::invalid_argument(
            "mean requires d = 0 and seasonal d = 0 (differenced models carry "
            "no intercept)");
    }

    DifferenceResult diff = difference(data.values, order.d, order.sd, order.s);
    const std::vector<double>& dx = diff.values;
    const std::size_t p_full =
        static_cast<std::size_t>(order.p) + static_cast<std::size_t>(order.s) * order.sp;
    if (dx.size() <= p_full) {
        throw std::runtime_error(
            "series too short: differenced series must be longer than the "
            "expanded AR order");
    }
    const ParameterPacking packing{order, include_mean};
    const int k = static_cast<int>(packing.size());
    const std::size_t n_eff = dx.size() - p_full;
    if (k > 0 && n_eff < static_cast<std::size_t>(10 * k)) {
        throw std::runtime_error(
            "series too short: need at least 10 effective observations per "
            "free parameter");
    }

    // Start values: Yule-Walker AR coefficients (seasonal part from the
    // season-strided autocorrelations), zero MA, sample mean.
    std::vector<double> start;
    if (cfg.initial_coefficients.has_value()) {
        start = *cfg.initial_coefficients;
        if (start.size() != packing.size()) {
            throw std::invalid_argument(
                "initial coefficient vector length does not match the order");
        }
    } else {
        const int max_lag = std::max(order.p, order.s * order.sp);
        const std::vector<double> acf =
            sample_acf(dx, std::min<int>(max_lag, static_cast<int>(dx.size()) - 1));
        auto acf_at = [&](int lag) {
            return lag < static_cast<int>(acf.size()) ? acf[lag] : 0.0;
        };
        std::vector<double> phi0 = levinson_durbin(acf, order.p);
        std::vector<double> season_rho(static_cast<std::size_t>(order.sp) + 1, 1.0);
        for (int j = 1; j <= order.sp; ++j) {
            season_rho[j] = acf_at(j * order.s);
        }
        std::vector<double> sphi0 = levinson_durbin(season_rho, order.sp);
        start.insert(start.end(), phi0.begin(), phi0.end());
        start.insert(start.end(), order.q, 0.0);
        start.insert(start.end(), sphi0.begin(), sphi0.end());
        start.insert(start.end(), order.sq, 0.0);
        if (include_mean) {
            start.push_back(std::accumulate(dx.begin(), dx.end(), 0.0) /
                            static_cast<double>(dx.size()));
        }
    }

    auto objective = [&](const std::vector<double>& params) {
        const double ssq = css_objective(packing.unpack(params, 1.0), dx);
        return std::isfinite(ssq) ? ssq : std::numeric_limits<double>::max();
    };

    FittedModel fitted;
    fitted.data = data;
    fitted.fit.method = "nelder-mead";

    double ssq_best;
    if (k == 0) {
        // Nothing to optimize (pure differencing / white noise without mean).
        ssq_best = css_objective(packing.unpack({}, 1.0), dx);
        fitted.fit.iterations = 0;
        fitted.fit.converged = true;
        fitted.model = packing.unpack({}, 1.0);
    } else {
        std::vector<double> steps(packing.size(), 0.1);
        if (include_mean) {
            steps.back() = std::max(0.1 * sample_sd(dx), 1e-3);
        }
        NelderMeadResult nm = nelder_mead(objective, start, steps,
                                          cfg.max_iterations, cfg.tolerance);
        ssq_best = nm.fx;
        fitted.fit.iterations = nm.iterations;
        fitted.fit.converged = nm.converged;
        if (!nm.converged) {
            fitted.fit.warnings.push_back("max-iterations-reached");
        }
        fitted.model = packing.unpack(nm.x, 1.0);
    }

    double sigma2 = ssq_best / static_cast<double>(n_eff);
    if (!(sigma2 > kSigma2Floor)) {
        sigma2 = kSigma2Floor;
        fitted.fit.warnings.push_back("sigma2-floored");
    }
    fitted.model.sigma2 = sigma2;
    finish_fit_statistics(fitted, dx, k);
    add_diagnostic_warnings(fitted);
    return fitted;
}

FittedModel load_model(const SarimaOrder& order, std::span<const double> phi,
                       std::span<const double> theta,
                       std::span<const double> sphi,
                       std::span<const double> stheta,
                       std::optional<double> mean, double sigma2,
                       const TimeSeries& data) {
    SarimaModel model = SarimaModel::make(
        order, std::vector<double>(phi.begin(), phi.end()),
        std::vector<double>(theta.begin(), theta.end()),
        std::vector<double>(sphi.begin(), sphi.end()),
        std::vector<double>(stheta.begin(), stheta.end()), mean, sigma2);
    DifferenceResult diff = difference(data.values, order.d, order.sd, order.s);
    FittedModel fitted;
    fitted.model = std::move(model);
    fitted.data = data;
    fitted.fit.method = "frozen";
    const int k = order.n_coefficients() + (mean.has_value() ? 1 : 0);
    finish_fit_statistics(fitted, diff.values, k);
    add_diagnostic_warnings(fitted);
    return fitted;
}

}  // namespace sarima
