#pragma once

#include <span>
#include <vector>

namespace sarima {

// Seed values needed to invert seasonal-then-ordinary differencing for a run
// of consecutive differenced values. For each seasonal stage j = 0..sd-1,
// xi_seasonal holds the s values of the stage-j series at the time steps
// immediately before the run; xi_ordinary holds one such value per ordinary
// stage. difference() anchors the run at the start of the surviving series,
// continuation_state() anchors it one step past the observed series, so the
// same integrate() serves both reconstruction and forecasting.
struct DifferencingState {
    int d = 0;
    int sd = 0;
    int s = 1;
    std::vector<double> xi_ordinary;  // d entries
    std::vector<double> xi_seasonal;  // sd * s entries, stage-major
};

struct DifferenceResult {
    std::vector<double> values;
    DifferencingState state;
};

// Apply sd passes of lag-s differencing, then d passes of lag-1 differencing.
// The result has length x.size() - d - sd*s; integrate() with the returned
// state reproduces x[d + sd*s ...].
DifferenceResult difference(std::span<const double> x, int d, int sd, int s);

// State for integrating a continuation that starts right after the end of x.
DifferencingState continuation_state(std::span<const double> x, int d, int sd,
                                     int s);

// Invert ordinary differencing first, then seasonal. Returns only the
// reconstructed run; the seed values are not repeated.
std::vector<double> integrate(std::span<const double> dx,
                              const DifferencingState& state);

}  // namespace sarima
