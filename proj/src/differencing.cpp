#include "sarima/differencing.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sarima {

namespace {

void check_orders(std::size_t n, int d, int sd, int s) {
    if (d < 0 || sd < 0) {
        throw std::invalid_argument("differencing orders must be >= 0");
    }
    if (s < 1) {
        throw std::invalid_argument("season length must be >= 1");
    }
    const std::size_t consumed =
        static_cast<std::size_t>(d) + static_cast<std::size_t>(sd) * s;
    if (n <= consumed) {
        throw std::runtime_error(
            "series too short: need more than " + std::to_string(consumed) +
            " observations for d=" + std::to_string(d) + ", sd=" +
            std::to_string(sd) + ", s=" + std::to_string(s));
    }
}

std::vector<double> diff_once(const std::vector<double>& x, int lag) {
    std::vector<double> out(x.size() - static_cast<std::size_t>(lag));
    for (std::size_t t = 0; t < out.size(); ++t) {
        out[t] = x[t + lag] - x[t];
    }
    return out;
}

// All intermediate series. seasonal[j] is the j-times seasonally differenced
// series (seasonal[0] is x itself); ordinary[i] continues from seasonal[sd]
// with i lag-1 passes. Element t of seasonal[j] sits at original time
// t + j*s; element t of ordinary[i] at original time t + sd*s + i.
struct Stages {
    std::vector<std::vector<double>> seasonal;
    std::vector<std::vector<double>> ordinary;
    int d, sd, s;
};

Stages decompose(std::span<const double> x, int d, int sd, int s) {
    Stages st;
    st.d = d;
    st.sd = sd;
    st.s = s;
    st.seasonal.reserve(sd + 1);
    st.seasonal.emplace_back(x.begin(), x.end());
    for (int j = 0; j < sd; ++j) {
        st.seasonal.push_back(diff_once(st.seasonal.back(), s));
    }
    st.ordinary.reserve(d + 1);
    st.ordinary.push_back(st.seasonal.back());
    for (int i = 0; i < d; ++i) {
        st.ordinary.push_back(diff_once(st.ordinary.back(), 1));
    }
    return st;
}

// Seeds for a run whose first element sits at original time T.
DifferencingState state_at(const Stages& st, std::size_t T) {
    DifferencingState state;
    state.d = st.d;
    state.sd = st.sd;
    state.s = st.s;
    state.xi_seasonal.resize(static_cast<std::size_t>(st.sd) * st.s);
    for (int j = 0; j < st.sd; ++j) {
        // stage-j series value at time T - s + r, array offset j*s
        const std::size_t base = T - st.s - static_cast<std::size_t>(j) * st.s;
        for (int r = 0; r < st.s; ++r) {
            state.xi_seasonal[static_cast<std::size_t>(j) * st.s + r] =
                st.seasonal[j][base + r];
        }
    }
    state.xi_ordinary.resize(st.d);
    for (int i = 0; i < st.d; ++i) {
        const std::size_t idx =
            T - 1 - static_cast<std::size_t>(st.sd) * st.s - i;
        state.xi_ordinary[i] = st.ordinary[i][idx];
    }
    return state;
}

}  // namespace

DifferenceResult difference(std::span<const double> x, int d, int sd, int s) {
    check_orders(x.size(), d, sd, s);
    Stages st = decompose(x, d, sd, s);
    DifferenceResult result;
    result.state = state_at(st, static_cast<std::size_t>(d) +
                                    static_cast<std::size_t>(sd) * s);
    result.values = std::move(st.ordinary.back());
    return result;
}

DifferencingState continuation_state(std::span<const double> x, int d, int sd,
                                     int s) {
    check_orders(x.size(), d, sd, s);
    return state_at(decompose(x, d, sd, s), x.size());
}

std::vector<double> integrate(std::span<const double> dx,
                              const DifferencingState& state) {
    if (state.d < 0 || state.sd < 0 || state.s < 1 ||
        state.xi_ordinary.size() != static_cast<std::size_t>(state.d) ||
        state.xi_seasonal.size() !=
            static_cast<std::size_t>(state.sd) * state.s) {
        throw std::invalid_argument(
            "state mismatch: xi lengths disagree with differencing orders");
    }
    std::vector<double> cur(dx.begin(), dx.end());
    // Ordinary stages unwind first, sequential cumulative sums.
    for (int i = state.d; i >= 1; --i) {
        double acc = state.xi_ordinary[i - 1];
        for (double& v : cur) {
            acc += v;
            v = acc;
        }
    }
    const std::size_t s = static_cast<std::size_t>(state.s);
    for (int j = state.sd; j >= 1; --j) {
        const std::size_t base = (static_cast<std::size_t>(j) - 1) * s;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k] += k < s ? state.xi_seasonal[base + k] : cur[k - s];
        }
    }
    return cur;
}

}  // namespace sarima
