#pragma once

#include <vector>

#include "geometry.hpp"
#include "interval_tree.hpp"
#include "time_interval.hpp"
#include "trajectory.hpp"

namespace stcube {

/// One trajectory segment as an indexable unit.
struct SegmentRecord {
    int node = -1;
    int run = -1;
    int segment = -1;  // index of the first control point within the run
    Vec3 a;
    Vec3 b;
    TimeInterval time_span;  // [a.t, b.t] in cube time
    Box3 bbox;

    static SegmentRecord of(int node, int run, int segment, const Vec3& a, const Vec3& b) {
        SegmentRecord r;
        r.node = node;
        r.run = run;
        r.segment = segment;
        r.a = a;
        r.b = b;
        r.time_span = TimeInterval::closed(std::min(a.t, b.t), std::max(a.t, b.t));
        r.bbox = Box3::of(a, b);
        return r;
    }
};

/// All segments of a drawing, in (node, run, segment) order. Instant runs have
/// no segments and contribute nothing.
inline std::vector<SegmentRecord> collect_segments(const SpaceTimeDrawing& d) {
    std::vector<SegmentRecord> out;
    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const auto& pts = tr.runs[r].pts;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                out.push_back(SegmentRecord::of(n, static_cast<int>(r), static_cast<int>(i),
                                                pts[i].p, pts[i + 1].p));
        }
    }
    return out;
}

/// Proximity structure over trajectory segments: an interval tree on cube-time
/// spans, an aggregate spatial box per node, and per-segment boxes. Queries
/// may over-return but never miss a qualifying segment.
class SegmentIndex {
public:
    static SegmentIndex build(std::vector<SegmentRecord> segments) {
        SegmentIndex idx;
        idx.segments_ = std::move(segments);

        std::vector<IntervalTree::Entry> entries;
        entries.reserve(idx.segments_.size());
        int max_node = -1;
        for (std::size_t i = 0; i < idx.segments_.size(); ++i) {
            const SegmentRecord& s = idx.segments_[i];
            entries.push_back({s.time_span.start, s.time_span.end, static_cast<int>(i)});
            max_node = std::max(max_node, s.node);
        }
        idx.tree_ = IntervalTree(std::move(entries));

        idx.node_extent_.assign(static_cast<std::size_t>(max_node + 1), Box3{});
        for (const SegmentRecord& s : idx.segments_)
            idx.node_extent_[static_cast<std::size_t>(s.node)].expand(s.bbox);
        return idx;
    }

    const std::vector<SegmentRecord>& segments() const { return segments_; }

    /// Ids of segments of other nodes that might lie within `radius` of the
    /// probe (cube distance). Conservative: no false negatives.
    std::vector<int> nearby(const SegmentRecord& probe, double radius) const {
        std::vector<int> out;
        if (segments_.empty()) return out;
        std::vector<int> candidates;
        tree_.window(probe.time_span.start - radius, probe.time_span.end + radius, candidates);

        const Box3 window = probe.bbox.inflated(radius);
        for (int id : candidates) {
            const SegmentRecord& s = segments_[static_cast<std::size_t>(id)];
            if (s.node == probe.node) continue;
            if (!node_extent_[static_cast<std::size_t>(s.node)].intersects(window)) continue;
            if (!s.bbox.intersects(window)) continue;
            out.push_back(id);
        }
        return out;
    }

    /// Ids of exactly the segments whose time span contains t.
    std::vector<int> stab(double t) const {
        std::vector<int> out;
        tree_.stab(t, out);
        return out;
    }

private:
    std::vector<SegmentRecord> segments_;
    std::vector<Box3> node_extent_;
    IntervalTree tree_;
};

}  // namespace stcube
