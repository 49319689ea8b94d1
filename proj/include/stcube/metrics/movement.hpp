#pragma once

#include "../trajectory.hpp"

namespace stcube {

/// Average 2D distance traveled: per node, the planar length of all its
/// trajectory segments (jump pairs included), averaged over the nodes that
/// have a trajectory, times the scale factor.
inline double movement(const SpaceTimeDrawing& d, double scale = 1.0) {
    double sum = 0.0;
    int counted = 0;
    for (const Trajectory& tr : d.trajectories) {
        if (tr.runs.empty()) continue;
        double travel = 0.0;
        for (const Run& r : tr.runs) travel += r.planar_length();
        sum += travel;
        ++counted;
    }
    return counted > 0 ? scale * sum / counted : 0.0;
}

}  // namespace stcube
