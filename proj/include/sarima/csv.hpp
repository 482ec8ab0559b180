#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sarima/time_series.hpp"

namespace sarima {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Strict parse of a full token; throws on anything else.
double parse_double(std::string_view text);

// Reads a headered CSV with either a single `value` column or `time,value`
// columns. start/frequency arguments override file-derived values; with a
// time column, start defaults to the first time and the frequency to the
// reciprocal of the first time step.
TimeSeries read_series_csv(std::istream& in, std::optional<double> start,
                           std::optional<int> frequency);

TimeSeries read_series_file(const std::string& path,
                            std::optional<double> start,
                            std::optional<int> frequency);

}  // namespace sarima
