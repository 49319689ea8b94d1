#pragma once

#include <algorithm>
#include <cmath>

#include "../trajectory.hpp"
#include "config.hpp"
#include "forces.hpp"

namespace stcube {

/// Turn accumulated forces into admissible movements, in place:
///   1. clamp each vector to the iteration's max-movement cap;
///   2. damp movement opposing the previous iteration's direction and mildly
///      boost aligned movement;
///   3. enforce time correctness: run endpoints, jump-pair members, and (in
///      discrete mode) every point keep their time coordinate; a bend's whole
///      movement is scaled so its new time stays strictly within half the
///      time-gap to each neighbour, preserving the time order along the run.
inline void apply_constraints(MovementField& f, const SpaceTimeDrawing& d,
                              const LayoutConfig& cfg, int iteration) {
    const double cap = cfg.max_move_at(iteration);
    // Strictness margin: the new time must stay short of the midpoint itself.
    constexpr double kShy = 1.0 - 1e-9;

    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const auto& pts = tr.runs[r].pts;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                Vec3 m = f.of(n, static_cast<int>(r), static_cast<int>(i));

                const double len = m.norm();
                if (len > cap) m = m * (cap / len);

                const Vec3& prev = f.prev_of(n, static_cast<int>(r), static_cast<int>(i));
                const double msq = m.norm_sq();
                const double psq = prev.norm_sq();
                if (msq > 0.0 && psq > 0.0) {
                    const double cosang = m.dot(prev) / std::sqrt(msq * psq);
                    m = m * std::clamp(1.0 + 0.5 * cosang, 0.3, 1.5);
                }

                const bool endpoint = i == 0 || i + 1 == pts.size();
                if (cfg.mode == LayoutMode::Discrete || endpoint || pts[i].jump) {
                    m.t = 0.0;
                } else if (m.t > 0.0) {
                    const double allowed = 0.5 * (pts[i + 1].p.t - pts[i].p.t) * kShy;
                    if (m.t > allowed) m = m * (allowed / m.t);
                } else if (m.t < 0.0) {
                    const double allowed = 0.5 * (pts[i].p.t - pts[i - 1].p.t) * kShy;
                    if (-m.t > allowed) m = m * (allowed / -m.t);
                }

                f.of(n, static_cast<int>(r), static_cast<int>(i)) = m;
            }
        }
    }
}

}  // namespace stcube
