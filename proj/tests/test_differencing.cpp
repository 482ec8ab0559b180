#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarima/csv.hpp"
#include "sarima/differencing.hpp"
#include "sarima/rng.hpp"

using namespace sarima;

TEST_CASE("first differences of a linear ramp") {
    const auto [dx, state] = difference(std::vector<double>{1, 2, 3, 4}, 1, 0, 1);
    CHECK(dx == std::vector<double>{1, 1, 1});
    CHECK(state.xi_ordinary == std::vector<double>{1});
    CHECK(state.xi_seasonal.empty());
}

TEST_CASE("lag-2 seasonal differences") {
    const auto [dx, state] = difference(std::vector<double>{1, 2, 4, 8}, 0, 1, 2);
    CHECK(dx == std::vector<double>{3, 6});
    CHECK(state.xi_seasonal == std::vector<double>{1, 2});
}

TEST_CASE("seasonal pass runs before the ordinary pass") {
    // seasonal lag-2 pass: [3, 6, 12]; ordinary pass: [3, 6]
    const auto [dx, state] =
        difference(std::vector<double>{1, 2, 4, 8, 16}, 1, 1, 2);
    CHECK(dx == std::vector<double>{3, 6});
    REQUIRE(state.xi_ordinary.size() == 1);
    CHECK(state.xi_ordinary[0] == 3);  // first value of the seasonal stage
    CHECK(state.xi_seasonal == std::vector<double>{2, 4});
    CHECK(integrate(dx, state) == std::vector<double>{8, 16});
}

TEST_CASE("integrate inverts the ramp example") {
    DifferencingState state;
    state.d = 1;
    state.xi_ordinary = {1};
    CHECK(integrate(std::vector<double>{1, 1, 1}, state) ==
          std::vector<double>{2, 3, 4});
}

TEST_CASE("integrate inverts the lag-2 example") {
    DifferencingState state;
    state.sd = 1;
    state.s = 2;
    state.xi_seasonal = {1, 2};
    CHECK(integrate(std::vector<double>{3, 6}, state) ==
          std::vector<double>{4, 8});
}

TEST_CASE("no differencing is the identity with empty seeds") {
    const std::vector<double> x{3.5, -1.0, 2.25};
    const auto [dx, state] = difference(x, 0, 0, 4);
    CHECK(dx == x);
    CHECK(state.xi_ordinary.empty());
    CHECK(state.xi_seasonal.empty());
    CHECK(integrate(dx, state) == x);
}

TEST_CASE("difference rejects series that are too short") {
    CHECK_THROWS_WITH_AS(difference(std::vector<double>{1, 2}, 2, 0, 1),
                         doctest::Contains("series too short"),
                         std::runtime_error);
    CHECK_THROWS_AS(difference(std::vector<double>(24, 1.0), 1, 2, 12),
                    std::runtime_error);
}

TEST_CASE("integrate rejects inconsistent states") {
    DifferencingState state;
    state.d = 2;
    state.xi_ordinary = {1.0};  // wrong length
    CHECK_THROWS_WITH_AS(integrate(std::vector<double>{1, 2}, state),
                         doctest::Contains("state mismatch"),
                         std::invalid_argument);
}

TEST_CASE("integrate of difference reproduces the tail") {
    SubstreamRng rng(77, 0);
    const int d_choices[] = {0, 1, 2};
    const int s_choices[] = {1, 4, 12};
    for (int rep = 0; rep < 300; ++rep) {
        const int d = d_choices[rng.next_u64() % 3];
        const int sd = d_choices[rng.next_u64() % 3];
        const int s = s_choices[rng.next_u64() % 3];
        const int n = d + sd * s + 1 + static_cast<int>(rng.next_u64() % 80);
        std::vector<double> x(n);
        for (double& v : x) {
            v = rng.next_normal();
        }
        const auto [dx, state] = difference(x, d, sd, s);
        REQUIRE(dx.size() == x.size() - d - static_cast<std::size_t>(sd) * s);
        const std::vector<double> rebuilt = integrate(dx, state);
        REQUIRE(rebuilt.size() == dx.size());
        double max_err = 0.0;
        for (std::size_t k = 0; k < rebuilt.size(); ++k) {
            max_err = std::max(
                max_err,
                std::fabs(rebuilt[k] - x[k + d + static_cast<std::size_t>(sd) * s]));
        }
        CHECK(max_err < 1e-9);
    }
}

TEST_CASE("airline series round trips through d=1, sd=1, s=12") {
    const TimeSeries ts =
        read_series_file(std::string(SARIMA_DATA_DIR) + "/airline.csv", 1949.0,
                         12);
    const auto [dx, state] = difference(ts.values, 1, 1, 12);
    REQUIRE(dx.size() == 131);
    const std::vector<double> rebuilt = integrate(dx, state);
    double max_err = 0.0;
    for (std::size_t k = 0; k < rebuilt.size(); ++k) {
        max_err = std::max(max_err, std::fabs(rebuilt[k] - ts.values[k + 13]));
    }
    CHECK(max_err < 1e-9);
}

TEST_CASE("continuation_state integrates future differences onto the series") {
    SubstreamRng rng(78, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = static_cast<int>(rng.next_u64() % 3);
        const int sd = static_cast<int>(rng.next_u64() % 3);
        const int s = 1 + static_cast<int>(rng.next_u64() % 12);
        const int m = 1 + static_cast<int>(rng.next_u64() % 20);
        const int n = d + sd * s + 1 + static_cast<int>(rng.next_u64() % 60);
        std::vector<double> whole(n + m);
        for (double& v : whole) {
            v = rng.next_normal();
        }
        // Differencing the full series and keeping the last m values must
        // agree with integrating those values from the observed prefix.
        const std::vector<double> dx_whole = difference(whole, d, sd, s).values;
        const std::vector<double> observed(whole.begin(), whole.end() - m);
        const DifferencingState state = continuation_state(observed, d, sd, s);
        const std::vector<double> future_dx(dx_whole.end() - m, dx_whole.end());
        const std::vector<double> rebuilt = integrate(future_dx, state);
        for (int k = 0; k < m; ++k) {
            CHECK(std::fabs(rebuilt[k] - whole[n + k]) < 1e-9);
        }
    }
}
