#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sarima {

// An equally spaced univariate series. Observation k lives at time
// start + k / frequency, e.g. start = 1949, frequency = 12 for monthly data.
struct TimeSeries {
    std::vector<double> values;
    double start = 0.0;
    int frequency = 1;

    TimeSeries() = default;

    TimeSeries(std::vector<double> values_, double start_, int frequency_)
        : values(std::move(values_)), start(start_), frequency(frequency_) {
        if (frequency < 1) {
            throw std::invalid_argument("TimeSeries: frequency must be >= 1");
        }
    }

    std::size_t size() const { return values.size(); }

    double time_at(std::size_t k) const {
        return start + static_cast<double>(k) / frequency;
    }

    // Time of the first step after the last observation.
    double end_time() const {
        return start + static_cast<double>(values.size()) / frequency;
    }
};

}  // namespace sarima
