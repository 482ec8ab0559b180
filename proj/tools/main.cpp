// sarima: fit SARIMA models to CSV series, forecast, and simulate random
// continuations of the observed data.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sarima/csv.hpp"
#include "sarima/estimation.hpp"
#include "sarima/model_io.hpp"
#include "sarima/simulation.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path);
    }
}

sarima::SarimaOrder order_from_flags(const std::vector<int>& order_values,
                                     int season_length) {
    if (order_values.size() != 3 && order_values.size() != 6) {
        throw CLI::ValidationError(
            "--order", "expected 3 (p d q) or 6 (p d q P D Q) integers");
    }
    sarima::SarimaOrder order;
    order.p = order_values[0];
    order.d = order_values[1];
    order.q = order_values[2];
    if (order_values.size() == 6) {
        order.sp = order_values[3];
        order.sd = order_values[4];
        order.sq = order_values[5];
    }
    order.s = season_length;
    order.validate();
    return order;
}

std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag.has_value()) {
        return flag;
    }
    if (const char* env = std::getenv("SARIMA_SEED")) {
        return static_cast<std::uint64_t>(std::stoull(env));
    }
    return std::nullopt;
}

std::string forecast_csv(const sarima::FittedModel& fitted,
                         const std::vector<double>& values) {
    std::ostringstream out;
    out << "time,forecast\n";
    const double start = fitted.data.end_time();
    for (std::size_t h = 0; h < values.size(); ++h) {
        const double t =
            start + static_cast<double>(h) / fitted.data.frequency;
        out << sarima::format_double(t) << ','
            << sarima::format_double(values[h]) << '\n';
    }
    return out.str();
}

std::string matrix_csv(const sarima::SimulationEnsemble& ens) {
    std::ostringstream out;
    out << "time";
    for (int j = 1; j <= ens.n_paths; ++j) {
        out << ",path_" << j;
    }
    out << '\n';
    for (int h = 0; h < ens.horizon; ++h) {
        out << sarima::format_double(ens.time_at(h));
        for (int j = 0; j < ens.n_paths; ++j) {
            out << ',' << sarima::format_double(ens.at(h, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string quantile_csv(const sarima::SimulationEnsemble& ens,
                         const sarima::QuantileTable& table) {
    std::ostringstream out;
    out << "time";
    for (double p : table.probabilities) {
        out << ",q" << sarima::format_double(p);
    }
    out << '\n';
    for (int h = 0; h < ens.horizon; ++h) {
        out << sarima::format_double(ens.time_at(h));
        for (std::size_t i = 0; i < table.probabilities.size(); ++i) {
            out << ',' << sarima::format_double(table.at(h, i));
        }
        out << '\n';
    }
    return out.str();
}

std::string plot_data_csv(const sarima::SimulationEnsemble& ens,
                          const std::vector<double>& forecast_values) {
    std::ostringstream out;
    out << "path,time,value,forecast,ensemble_mean\n";
    for (int j = 0; j < ens.n_paths; ++j) {
        for (int h = 0; h < ens.horizon; ++h) {
            out << (j + 1) << ',' << sarima::format_double(ens.time_at(h))
                << ',' << sarima::format_double(ens.at(h, j)) << ','
                << sarima::format_double(forecast_values[h]) << ','
                << sarima::format_double(ens.mean[h]) << '\n';
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Seasonal ARIMA fitting, forecasting and conditional simulation"};
    app.require_subcommand(1);

    // fit
    std::string fit_input;
    std::vector<int> fit_order;
    int fit_season = 1;
    std::optional<double> fit_start;
    std::optional<int> fit_frequency;
    bool fit_mean_on = false;
    bool fit_mean_off = false;
    int fit_max_iterations = 500;
    double fit_tolerance = 1e-8;
    std::string fit_output;
    CLI::App* fit_cmd = app.add_subcommand("fit", "fit a model to a CSV series");
    fit_cmd->add_option("input", fit_input, "input CSV (value or time,value)")
        ->required();
    fit_cmd->add_option("--order", fit_order, "orders: p d q [P D Q]")
        ->required()
        ->expected(3, 6);
    fit_cmd->add_option("--s,--period", fit_season, "season length");
    fit_cmd->add_option("--start", fit_start, "time of the first observation");
    fit_cmd->add_option("--frequency", fit_frequency,
                        "observations per time unit");
    fit_cmd->add_flag("--mean", fit_mean_on,
                      "estimate the process mean (default: only when no "
                      "differencing is applied)");
    fit_cmd->add_flag("--no-mean", fit_mean_off, "never estimate a mean");
    fit_cmd->add_option("--max-iterations", fit_max_iterations,
                        "optimizer iteration cap");
    fit_cmd->add_option("--tolerance", fit_tolerance,
                        "optimizer convergence tolerance");
    fit_cmd->add_option("-o,--output", fit_output,
                        "write the model JSON here instead of stdout");

    // forecast
    std::string forecast_model;
    int forecast_horizon = 12;
    std::string forecast_output;
    CLI::App* forecast_cmd =
        app.add_subcommand("forecast", "exact forecasts from a model file");
    forecast_cmd->add_option("model", forecast_model, "model JSON file")
        ->required();
    forecast_cmd
        ->add_option("--horizon", forecast_horizon, "steps ahead")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    forecast_cmd->add_option("-o,--output", forecast_output, "output CSV path");

    // simulate
    std::string sim_model;
    int sim_horizon = 12;
    int sim_paths = 1;
    std::optional<std::uint64_t> sim_seed;
    bool sim_zero_innovations = false;
    std::vector<double> sim_quantiles;
    bool sim_plot_data = false;
    int sim_threads = 0;
    std::string sim_output;
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "random continuations of the observed series");
    sim_cmd->add_option("model", sim_model, "model JSON file")->required();
    sim_cmd->add_option("--horizon", sim_horizon, "steps ahead")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    sim_cmd->add_option("--paths", sim_paths, "number of simulated paths")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    sim_cmd->add_option("--seed", sim_seed,
                        "RNG seed (falls back to SARIMA_SEED)");
    sim_cmd->add_flag("--zero-innovations", sim_zero_innovations,
                      "single path with all innovations zero (the forecast)");
    sim_cmd
        ->add_option("--quantiles", sim_quantiles,
                     "emit per-horizon quantiles instead of the path matrix")
        ->delimiter(',');
    sim_cmd->add_flag("--plot-data", sim_plot_data,
                      "long-format output: path,time,value,forecast,mean");
    sim_cmd->add_option("--threads", sim_threads,
                        "worker threads (0 = hardware)");
    sim_cmd->add_option("-o,--output", sim_output, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (fit_cmd->parsed()) {
            const sarima::TimeSeries series =
                sarima::read_series_file(fit_input, fit_start, fit_frequency);
            const sarima::SarimaOrder order =
                order_from_flags(fit_order, fit_season);
            sarima::FitConfig cfg;
            cfg.max_iterations = fit_max_iterations;
            cfg.tolerance = fit_tolerance;
            if (fit_mean_on) {
                cfg.include_mean = true;
            } else if (fit_mean_off) {
                cfg.include_mean = false;
            }
            const sarima::FittedModel fitted = sarima::fit(series, order, cfg);
            for (const std::string& w : fitted.fit.warnings) {
                std::cerr << "warning: " << w << '\n';
            }
            write_output(sarima::to_json(fitted), fit_output);
        } else if (forecast_cmd->parsed()) {
            const sarima::FittedModel fitted =
                sarima::load_model_file(forecast_model);
            const std::vector<double> values =
                sarima::forecast(fitted, forecast_horizon);
            write_output(forecast_csv(fitted, values), forecast_output);
        } else if (sim_cmd->parsed()) {
            const sarima::FittedModel fitted =
                sarima::load_model_file(sim_model);
            sarima::SimulationRequest request;
            request.horizon = sim_horizon;
            request.n_paths = sim_paths;
            request.seed = resolve_seed(sim_seed);
            request.zero_innovations = sim_zero_innovations;
            const sarima::SimulationEnsemble ens =
                sarima::simulate_ensemble(fitted, request, sim_threads);
            if (!sim_quantiles.empty()) {
                const sarima::QuantileTable table =
                    sarima::ensemble_summary(ens, sim_quantiles);
                write_output(quantile_csv(ens, table), sim_output);
            } else if (sim_plot_data) {
                const std::vector<double> fc =
                    sarima::forecast(fitted, sim_horizon);
                write_output(plot_data_csv(ens, fc), sim_output);
            } else {
                write_output(matrix_csv(ens), sim_output);
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
