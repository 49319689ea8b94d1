#pragma once

#include <vector>

#include "../trajectory.hpp"
#include "config.hpp"
#include "forces.hpp"

namespace stcube {

/// Resample trajectory polylines, in place. First a removal sweep: a bend
/// whose neighbours a, c satisfy |a - c| < remove_threshold is dropped
/// (left-to-right, cascading); endpoints and jump-pair members are never
/// removed. Then an insertion sweep: every segment longer than
/// insert_threshold gains one midpoint bend (no recursion within one call).
/// When `field` is given, its previous-movement grid is kept aligned: removed
/// entries are dropped and inserted bends start with zero previous movement.
inline void adjust_complexity(SpaceTimeDrawing& d, const LayoutConfig& cfg,
                              MovementField* field = nullptr) {
    const double remove_at = cfg.remove_threshold();
    const double insert_at = cfg.insert_threshold();

    for (std::size_t n = 0; n < d.trajectories.size(); ++n) {
        for (std::size_t r = 0; r < d.trajectories[n].runs.size(); ++r) {
            auto& pts = d.trajectories[n].runs[r].pts;
            std::vector<Vec3>* prev = field ? &field->prev[n][r] : nullptr;

            std::size_t i = 1;
            while (pts.size() >= 3 && i + 1 < pts.size()) {
                const bool removable = !pts[i].jump &&
                    (pts[i + 1].p - pts[i - 1].p).norm() < remove_at;
                if (removable) {
                    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                    if (prev) prev->erase(prev->begin() + static_cast<std::ptrdiff_t>(i));
                    // Stay put: the new pts[i] gets re-evaluated against its
                    // new neighbours.
                } else {
                    ++i;
                }
            }

            std::vector<ControlPoint> out;
            std::vector<Vec3> pout;
            out.reserve(pts.size());
            for (std::size_t k = 0; k < pts.size(); ++k) {
                out.push_back(pts[k]);
                if (prev) pout.push_back((*prev)[k]);
                if (k + 1 < pts.size()) {
                    const double dt = pts[k + 1].p.t - pts[k].p.t;
                    if (dt > 0.0 && (pts[k + 1].p - pts[k].p).norm() > insert_at) {
                        out.push_back({(pts[k].p + pts[k + 1].p) * 0.5, false});
                        if (prev) pout.push_back(Vec3{});
                    }
                }
            }
            pts = std::move(out);
            if (prev) *prev = std::move(pout);
        }
    }
}

}  // namespace stcube
