#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace stcube {

/// An interval of real time with individually open or closed bounds.
/// A degenerate instant (start == end) must be closed on both sides.
struct TimeInterval {
    double start = 0.0;
    double end = 0.0;
    bool start_closed = true;
    bool end_closed = true;

    static TimeInterval closed(double s, double e) { return {s, e, true, true}; }
    static TimeInterval open(double s, double e) { return {s, e, false, false}; }
    /// [s, e)
    static TimeInterval right_open(double s, double e) { return {s, e, true, false}; }
    /// (s, e]
    static TimeInterval left_open(double s, double e) { return {s, e, false, true}; }
    static TimeInterval instant(double s) { return {s, s, true, true}; }
    static TimeInterval all() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(), false, false};
    }

    bool is_instant() const { return start == end; }
    double length() const { return end - start; }

    bool valid() const {
        return start < end || (start == end && start_closed && end_closed);
    }

    /// Exact membership honouring open/closed bounds.
    bool contains(double t) const {
        if (t < start || t > end) return false;
        if (t == start && !start_closed) return false;
        if (t == end && !end_closed) return false;
        return true;
    }

    /// Half-open [start, end) membership used for sampling, so that a boundary
    /// instant belongs to exactly one piece. Degenerate instants still match.
    bool sample_contains(double t) const {
        if (is_instant()) return t == start;
        return start <= t && t < end;
    }

    /// Fraction of t through the interval, clamped to [0, 1].
    double fraction(double t) const {
        if (end <= start) return 0.0;
        return std::clamp((t - start) / (end - start), 0.0, 1.0);
    }

    bool operator==(const TimeInterval& o) const {
        return start == o.start && end == o.end &&
               start_closed == o.start_closed && end_closed == o.end_closed;
    }
    bool operator!=(const TimeInterval& o) const { return !(*this == o); }
};

/// True when a's start bound begins no later than b's.
inline bool start_not_after(const TimeInterval& a, const TimeInterval& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.start_closed || !b.start_closed;
}

/// True when a's end bound finishes no earlier than b's.
inline bool end_not_before(const TimeInterval& a, const TimeInterval& b) {
    if (a.end != b.end) return a.end > b.end;
    return a.end_closed || !b.end_closed;
}

inline std::optional<TimeInterval> intersect(const TimeInterval& a, const TimeInterval& b) {
    TimeInterval r;
    if (a.start != b.start) {
        const TimeInterval& later = (a.start > b.start) ? a : b;
        r.start = later.start;
        r.start_closed = later.start_closed;
    } else {
        r.start = a.start;
        r.start_closed = a.start_closed && b.start_closed;
    }
    if (a.end != b.end) {
        const TimeInterval& earlier = (a.end < b.end) ? a : b;
        r.end = earlier.end;
        r.end_closed = earlier.end_closed;
    } else {
        r.end = a.end;
        r.end_closed = a.end_closed && b.end_closed;
    }
    if (!r.valid()) return std::nullopt;
    return r;
}

inline bool overlaps(const TimeInterval& a, const TimeInterval& b) {
    return intersect(a, b).has_value();
}

/// Overlapping, or touching so that the union is a single interval
/// (e.g. [1,2] and (2,3], or [1,2) and [2,3]).
inline bool mergeable(const TimeInterval& a, const TimeInterval& b) {
    if (overlaps(a, b)) return true;
    if (a.end == b.start && (a.end_closed || b.start_closed)) return true;
    if (b.end == a.start && (b.end_closed || a.start_closed)) return true;
    return false;
}

/// Union of two mergeable intervals.
inline TimeInterval merge(const TimeInterval& a, const TimeInterval& b) {
    TimeInterval r;
    const TimeInterval& s = start_not_after(a, b) ? a : b;
    const TimeInterval& e = end_not_before(a, b) ? a : b;
    r.start = s.start;
    r.start_closed = s.start_closed;
    r.end = e.end;
    r.end_closed = e.end_closed;
    return r;
}

/// a minus b; zero, one, or two pieces. May produce degenerate instants,
/// e.g. [0,4] - (0,4) = { [0,0], [4,4] }.
inline std::vector<TimeInterval> subtract(const TimeInterval& a, const TimeInterval& b) {
    std::vector<TimeInterval> out;
    if (!overlaps(a, b)) {
        out.push_back(a);
        return out;
    }
    // Portion of a before b's start.
    TimeInterval left{a.start, b.start, a.start_closed, !b.start_closed};
    if (left.start < left.end || (left.start == left.end && left.start_closed && left.end_closed))
        out.push_back(left);
    // Portion of a after b's end.
    TimeInterval right{b.end, a.end, !b.end_closed, a.end_closed};
    if (right.start < right.end || (right.start == right.end && right.start_closed && right.end_closed))
        out.push_back(right);
    return out;
}

/// A canonical union of intervals: sorted, pairwise disjoint, non-adjacent.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(const TimeInterval& iv) { add(iv); }

    const std::vector<TimeInterval>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    void add(const TimeInterval& iv) {
        if (!iv.valid()) return;
        TimeInterval merged = iv;
        std::vector<TimeInterval> next;
        next.reserve(items_.size() + 1);
        for (const TimeInterval& it : items_) {
            if (mergeable(it, merged)) {
                merged = merge(it, merged);
            } else {
                next.push_back(it);
            }
        }
        next.push_back(merged);
        std::sort(next.begin(), next.end(), [](const TimeInterval& x, const TimeInterval& y) {
            return !start_not_after(y, x);  // x starts strictly before y
        });
        items_ = std::move(next);
    }

    void subtract(const TimeInterval& iv) {
        std::vector<TimeInterval> next;
        next.reserve(items_.size() + 1);
        for (const TimeInterval& it : items_) {
            for (const TimeInterval& piece : stcube::subtract(it, iv))
                next.push_back(piece);
        }
        items_ = std::move(next);
    }

    bool contains(double t) const {
        for (const TimeInterval& it : items_)
            if (it.contains(t)) return true;
        return false;
    }

    IntervalSet intersected(const TimeInterval& iv) const {
        IntervalSet out;
        for (const TimeInterval& it : items_)
            if (auto r = intersect(it, iv))
                out.add(*r);
        return out;
    }

    IntervalSet intersected(const IntervalSet& other) const {
        IntervalSet out;
        for (const TimeInterval& a : items_)
            for (const TimeInterval& b : other.items_)
                if (auto r = intersect(a, b))
                    out.add(*r);
        return out;
    }

    double total_length() const {
        double sum = 0.0;
        for (const TimeInterval& it : items_) sum += it.length();
        return sum;
    }

private:
    std::vector<TimeInterval> items_;
};

}  // namespace stcube
