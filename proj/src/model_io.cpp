#include "sarima/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace sarima {

namespace {

using nlohmann::json;

json order_to_json(const SarimaOrder& order) {
    return json{{"p", order.p},   {"d", order.d},   {"q", order.q},
                {"sp", order.sp}, {"sd", order.sd}, {"sq", order.sq},
                {"s", order.s}};
}

SarimaOrder order_from_json(const json& j) {
    SarimaOrder order;
    order.p = j.at("p").get<int>();
    order.d = j.at("d").get<int>();
    order.q = j.at("q").get<int>();
    order.sp = j.at("sp").get<int>();
    order.sd = j.at("sd").get<int>();
    order.sq = j.at("sq").get<int>();
    order.s = j.at("s").get<int>();
    return order;
}

}  // namespace

std::string to_json(const FittedModel& fitted) {
    const SarimaModel& model = fitted.model;
    json j{
        {"order", order_to_json(model.order)},
        {"phi", model.phi},
        {"theta", model.theta},
        {"sphi", model.sphi},
        {"stheta", model.stheta},
        {"mean", model.mean.has_value() ? json(*model.mean) : json(nullptr)},
        {"sigma2", model.sigma2},
        {"phi_full", model.phi_full},
        {"theta_full", model.theta_full},
        {"data",
         {{"values", fitted.data.values},
          {"start", fitted.data.start},
          {"frequency", fitted.data.frequency}}},
        {"residuals", fitted.residuals},
        {"loglik_css", fitted.loglik_css},
        {"aic", fitted.aic},
        {"fit",
         {{"method", fitted.fit.method},
          {"iterations", fitted.fit.iterations},
          {"converged", fitted.fit.converged},
          {"warnings", fitted.fit.warnings}}},
    };
    return j.dump(2) + "\n";
}

FittedModel fitted_model_from_json(const std::string& text) {
    json j = json::parse(text);

    const json& jm = j.at("mean");
    std::optional<double> mean;
    if (!jm.is_null()) {
        mean = jm.get<double>();
    }
    SarimaModel model = SarimaModel::make(
        order_from_json(j.at("order")), j.at("phi").get<std::vector<double>>(),
        j.at("theta").get<std::vector<double>>(),
        j.at("sphi").get<std::vector<double>>(),
        j.at("stheta").get<std::vector<double>>(), mean,
        j.at("sigma2").get<double>());

    const json& jd = j.at("data");
    TimeSeries data(jd.at("values").get<std::vector<double>>(),
                    jd.at("start").get<double>(),
                    jd.at("frequency").get<int>());

    FittedModel fitted;
    fitted.model = std::move(model);
    fitted.data = std::move(data);
    fitted.residuals = j.at("residuals").get<std::vector<double>>();
    const std::size_t consumed =
        static_cast<std::size_t>(fitted.model.order.d) +
        static_cast<std::size_t>(fitted.model.order.sd) * fitted.model.order.s;
    if (fitted.data.values.size() <= consumed ||
        fitted.residuals.size() != fitted.data.values.size() - consumed) {
        throw std::runtime_error(
            "model file invalid: residuals do not align with the differenced "
            "series");
    }
    fitted.loglik_css = j.at("loglik_css").get<double>();
    fitted.aic = j.at("aic").get<double>();
    const json& jf = j.at("fit");
    fitted.fit.method = jf.at("method").get<std::string>();
    fitted.fit.iterations = jf.at("iterations").get<int>();
    fitted.fit.converged = jf.at("converged").get<bool>();
    fitted.fit.warnings = jf.at("warnings").get<std::vector<std::string>>();
    return fitted;
}

void save_model(const FittedModel& fitted, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << to_json(fitted);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path);
    }
}

FittedModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open model file: " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return fitted_model_from_json(text);
}

}  // namespace sarima
