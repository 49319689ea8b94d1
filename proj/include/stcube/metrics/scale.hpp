#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "slice.hpp"
#include "stress.hpp"

namespace stcube {

struct ScaleSearch {
    double scale = 1.0;
    int exponent = 0;
    bool interior = true;             // minimum not at the range boundary
    std::vector<double> stresses;     // on-slice stress for i = -19 .. 19
};

namespace detail {

/// Per-slice (drawn planar distance, graph distance) pairs, so the scale
/// sweep can reuse them without re-slicing.
inline std::vector<std::vector<std::pair<double, double>>> stress_samples(
    const SpaceTimeDrawing& d, const ContinuousDynamicGraph& g,
    const std::vector<double>& slice_times, Presence mode) {
    std::vector<std::vector<std::pair<double, double>>> out;
    for (double t : slice_times) {
        const SliceGraph s = slice(d, g, t, mode, slice_times);
        std::vector<std::pair<double, double>> pairs;
        const int m = s.count();
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const double d_uv = s.distances[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)];
                if (!std::isfinite(d_uv) || d_uv <= 0.0) continue;
                const double raw = (s.positions[static_cast<std::size_t>(i)] -
                                    s.positions[static_cast<std::size_t>(j)]).norm();
                pairs.emplace_back(raw, d_uv);
            }
        }
        out.push_back(std::move(pairs));
    }
    return out;
}

inline double stress_at_scale(
    const std::vector<std::vector<std::pair<double, double>>>& samples, double scale) {
    if (samples.empty()) return 0.0;
    double total = 0.0;
    for (const auto& pairs : samples) {
        double sum = 0.0;
        for (const auto& [raw, d_uv] : pairs) {
            const double dev = scale * raw - d_uv;
            sum += dev * dev / (d_uv * d_uv);
        }
        total += pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
    }
    return total / static_cast<double>(samples.size());
}

}  // namespace detail

/// Sweep scale factors 1.1^i for integer i in (-20, 20) and keep the one with
/// the lowest on-slice stress (first strict minimum wins).
inline ScaleSearch best_scale(const SpaceTimeDrawing& d, const ContinuousDynamicGraph& g,
                              const std::vector<double>& slice_times,
                              Presence mode = Presence::Discrete) {
    const auto samples = detail::stress_samples(d, g, slice_times, mode);

    ScaleSearch result;
    // Nothing to fit (no slices, or no connected pair on any slice): every
    // scale ties at zero stress, so keep the neutral scale.
    const bool any_pairs =
        std::any_of(samples.begin(), samples.end(),
                    [](const auto& pairs) { return !pairs.empty(); });
    if (!any_pairs) {
        result.stresses.assign(39, 0.0);
        return result;
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = -19; i <= 19; ++i) {
        const double s = std::pow(1.1, i);
        const double value = detail::stress_at_scale(samples, s);
        result.stresses.push_back(value);
        if (value < best) {
            best = value;
            result.exponent = i;
            result.scale = s;
        }
    }
    result.interior = result.exponent > -19 && result.exponent < 19;
    return result;
}

}  // namespace stcube
