#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "sad/errors.hpp"

namespace sad {

struct SignalStats {
    double amplitude = 0.0;
    double frequency = 0.0;
    int crossings = 0;
};

// Peak-to-peak amplitude and zero-crossing frequency of a sampled signal.
// Crossing times are linearly interpolated; the frequency needs at least two
// crossings (half a period) and is zero otherwise.
inline SignalStats measure_signal(std::span<const double> t, std::span<const double> y) {
    if (t.size() != y.size()) throw DimensionError("measure_signal: length mismatch");
    if (t.size() < 2) throw DimensionError("measure_signal: need at least two samples");

    SignalStats stats;
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    stats.amplitude = 0.5 * (*hi - *lo);

    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        if ((y[i] > 0.0 && y[i + 1] < 0.0) || (y[i] < 0.0 && y[i + 1] > 0.0)) {
            crossings.push_back(t[i] - y[i] * (t[i + 1] - t[i]) / (y[i + 1] - y[i]));
        } else if (y[i] == 0.0 && y[i + 1] != 0.0) {
            crossings.push_back(t[i]);
        }
    }
    stats.crossings = static_cast<int>(crossings.size());
    if (crossings.size() >= 2)
        stats.frequency =
            static_cast<double>(crossings.size() - 1) / (2.0 * (crossings.back() - crossings.front()));
    return stats;
}

}  // namespace sad
