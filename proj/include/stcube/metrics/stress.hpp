#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "slice.hpp"

namespace stcube {

/// Average pairwise stress of one slice at the given scale: for connected
/// pairs, ((scale * drawn distance) - d_uv)^2 / d_uv^2, averaged; pairs in
/// different components are skipped. Fewer than two nodes gives 0.
inline double stress(const SliceGraph& s, double scale = 1.0) {
    double sum = 0.0;
    long pairs = 0;
    const int m = s.count();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double d_uv = s.distances[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)];
            if (!std::isfinite(d_uv) || d_uv <= 0.0) continue;
            const double drawn =
                scale * (s.positions[static_cast<std::size_t>(i)] -
                         s.positions[static_cast<std::size_t>(j)]).norm();
            const double dev = drawn - d_uv;
            sum += dev * dev / (d_uv * d_uv);
            ++pairs;
        }
    }
    return pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
}

/// Sample times for off-slice stress: the slice times plus `between` evenly
/// spaced times inside every gap between consecutive slices.
inline std::vector<double> off_slice_times(const std::vector<double>& slice_times,
                                           int between = 1) {
    std::vector<double> out;
    for (std::size_t i = 0; i < slice_times.size(); ++i) {
        out.push_back(slice_times[i]);
        if (i + 1 == slice_times.size()) continue;
        const double gap = slice_times[i + 1] - slice_times[i];
        for (int k = 1; k <= between; ++k)
            out.push_back(slice_times[i] + gap * k / (between + 1));
    }
    return out;
}

/// Mean stress over the slice times (on) and over slices plus between-slice
/// samples (off), at one scale.
inline std::pair<double, double> stress_aggregates(const SpaceTimeDrawing& d,
                                                   const ContinuousDynamicGraph& g,
                                                   const std::vector<double>& slice_times,
                                                   Presence mode, double scale,
                                                   int between = 1) {
    double on_sum = 0.0;
    for (double t : slice_times) on_sum += stress(slice(d, g, t, mode, slice_times), scale);
    const double on =
        slice_times.empty() ? 0.0 : on_sum / static_cast<double>(slice_times.size());

    const std::vector<double> off_times = off_slice_times(slice_times, between);
    double off_sum = 0.0;
    for (double t : off_times) off_sum += stress(slice(d, g, t, mode, slice_times), scale);
    const double off =
        off_times.empty() ? 0.0 : off_sum / static_cast<double>(off_times.size());
    return {on, off};
}

}  // namespace stcube
