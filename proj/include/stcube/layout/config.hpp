#pragma once

#include <algorithm>
#include <cstdint>

namespace stcube {

enum class LayoutMode { Continuous, Discrete };

/// Per-force multipliers. The defaults are tuned so that an isolated pair of
/// nodes joined by an always-present edge settles within 10% of delta.
/// Repulsion is deliberately small: every control point repels several
/// segments of each nearby trajectory (the in-time one plus its neighbours
/// through the endpoint fallback), so the effective push between two
/// trajectories is a few times the single-segment value. Gravity stays weak
/// enough not to collapse larger drawings; retune per dataset if needed.
struct ForceWeights {
    double repulsion = 0.02;
    double attraction = 1.0;
    double gravity = 0.01;
    double straightening = 0.5;
    double mental_map = 1.0;
};

struct LayoutConfig {
    double delta = 1.0;   // ideal edge length
    double tau = 1.0;     // time-to-space conversion factor
    int iterations = 100;
    ForceWeights weights;

    // Zero means "derive from delta" via the accessors below.
    double max_move_start = 0.0;        // default 2 * delta
    double max_move_end = 0.0;          // default 0.1 * delta
    double bend_insert_threshold = 0.0; // default 2 * delta
    double bend_remove_threshold = 0.0; // default 1.5 * delta
    double repulsion_cutoff = 0.0;      // default 5 * delta

    std::uint64_t rng_seed = 1;
    LayoutMode mode = LayoutMode::Continuous;

    double move_start() const { return max_move_start > 0.0 ? max_move_start : 2.0 * delta; }
    double move_end() const { return max_move_end > 0.0 ? max_move_end : 0.1 * delta; }
    double insert_threshold() const {
        return bend_insert_threshold > 0.0 ? bend_insert_threshold : 2.0 * delta;
    }
    double remove_threshold() const {
        return bend_remove_threshold > 0.0 ? bend_remove_threshold : 1.5 * delta;
    }
    double cutoff() const { return repulsion_cutoff > 0.0 ? repulsion_cutoff : 5.0 * delta; }

    /// Linear decay of the per-iteration movement cap across the run.
    double max_move_at(int iteration) const {
        if (iterations <= 1) return move_start();
        const double f = std::clamp(static_cast<double>(iteration) / (iterations - 1), 0.0, 1.0);
        return move_start() + (move_end() - move_start()) * f;
    }

    bool valid() const {
        return delta > 0.0 && tau > 0.0 && iterations >= 0 && insert_threshold() > 0.0 &&
               remove_threshold() > 0.0 && cutoff() > 0.0 && move_end() > 0.0 &&
               move_end() <= move_start();
    }
};

}  // namespace stcube
