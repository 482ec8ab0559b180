#include "sarima/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sarima/lag_polynomial.hpp"

namespace sarima {

void SarimaOrder::validate() const {
    if (p < 0 || d < 0 || q < 0 || sp < 0 || sd < 0 || sq < 0) {
        throw std::invalid_argument("model orders must be >= 0");
    }
    if (s < 1) {
        throw std::invalid_argument("season length must be >= 1");
    }
}

namespace {

void check_length(const std::vector<double>& v, int expected,
                  const char* name) {
    if (v.size() != static_cast<std::size_t>(expected)) {
        throw std::invalid_argument(std::string(name) + " has " +
                                    std::to_string(v.size()) +
                                    " coefficients, order expects " +
                                    std::to_string(expected));
    }
}

}  // namespace

SarimaModel SarimaModel::make(const SarimaOrder& order,
                              std::vector<double> phi,
                              std::vector<double> theta,
                              std::vector<double> sphi,
                              std::vector<double> stheta,
                              std::optional<double> mean, double sigma2) {
    order.validate();
    check_length(phi, order.p, "phi");
    check_length(theta, order.q, "theta");
    check_length(sphi, order.sp, "sphi");
    check_length(stheta, order.sq, "stheta");
    if (mean.has_value() && (order.d > 0 || order.sd > 0)) {
        throw std::invalid_argument(
            "mean requires d = 0 and seasonal d = 0 (differenced models carry "
            "no intercept)");
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("sigma2 must be > 0");
    }
    SarimaModel model;
    model.order = order;
    model.phi = std::move(phi);
    model.theta = std::move(theta);
    model.sphi = std::move(sphi);
    model.stheta = std::move(stheta);
    model.mean = mean;
    model.sigma2 = sigma2;
    model.rebuild_expansions();
    return model;
}

void SarimaModel::rebuild_expansions() {
    phi_full = expand_ar(phi, sphi, order.s);
    theta_full = expand_ma(theta, stheta, order.s);
}

double intercept_from_mean(const SarimaModel& model) {
    if (!model.mean.has_value()) {
        return 0.0;
    }
    double phi_sum = 0.0;
    for (double c : model.phi_full) {
        phi_sum += c;
    }
    return *model.mean * (1.0 - phi_sum);
}

}  // namespace sarima
