#include "sarima/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sarima {

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    // Tolerate surrounding whitespace and a trailing CR from Windows files.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                             text.back() == '\r')) {
        text.remove_suffix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() ||
        text.empty()) {
        throw std::runtime_error("not a number: '" + std::string(text) + "'");
    }
    return value;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type begin = 0;
    while (true) {
        const auto comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

}  // namespace

TimeSeries read_series_csv(std::istream& in, std::optional<double> start,
                           std::optional<int> frequency) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("series too short: empty input");
    }
    const std::size_t n_columns = split_fields(line).size();
    if (n_columns != 1 && n_columns != 2) {
        throw std::runtime_error(
            "expected a `value` or `time,value` CSV header");
    }

    std::vector<double> times;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != n_columns) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(n_columns) +
                                     " fields");
        }
        try {
            if (n_columns == 2) {
                times.push_back(parse_double(fields[0]));
                values.push_back(parse_double(fields[1]));
            } else {
                values.push_back(parse_double(fields[0]));
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    if (values.empty()) {
        throw std::runtime_error("series too short: no observations");
    }

    double series_start = start.value_or(0.0);
    int series_frequency = frequency.value_or(1);
    if (n_columns == 2) {
        if (!start.has_value()) {
            series_start = times.front();
        }
        if (!frequency.has_value()) {
            if (times.size() < 2 || times[1] <= times[0]) {
                throw std::runtime_error(
                    "cannot infer frequency from the time column; pass it "
                    "explicitly");
            }
            series_frequency =
                static_cast<int>(std::lround(1.0 / (times[1] - times[0])));
            if (series_frequency < 1) {
                series_frequency = 1;
            }
        }
    }
    return TimeSeries(std::move(values), series_start, series_frequency);
}

TimeSeries read_series_file(const std::string& path,
                            std::optional<double> start,
                            std::optional<int> frequency) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open series file: " + path);
    }
    return read_series_csv(in, start, frequency);
}

}  // namespace sarima
