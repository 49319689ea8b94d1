#pragma once

#include <algorithm>
#include <concepts>
#include <vector>

#include "geometry.hpp"
#include "time_interval.hpp"

namespace stcube {

/// Value types that support affine combination (positions, scalars).
template <typename V>
concept AffineValue = requires(V a, V b, double f) {
    { lerp(a, b, f) } -> std::convertible_to<V>;
};

/// The value carried by one piece of a piecewise attribute: either a constant,
/// or a linear blend from a start value to an end value across the interval.
template <typename V>
struct PieceFunction {
    enum class Kind { Constant, Linear };

    Kind kind = Kind::Constant;
    V start_value{};
    V end_value{};

    static PieceFunction constant(V v) {
        PieceFunction f;
        f.kind = Kind::Constant;
        f.start_value = v;
        f.end_value = v;
        return f;
    }

    static PieceFunction linear(V a, V b) requires AffineValue<V> {
        PieceFunction f;
        f.kind = Kind::Linear;
        f.start_value = a;
        f.end_value = b;
        return f;
    }

    V at(const TimeInterval& span, double t) const {
        if constexpr (AffineValue<V>) {
            if (kind == Kind::Linear)
                return lerp(start_value, end_value, span.fraction(t));
        }
        return start_value;
    }
};

/// An attribute defined piecewise over time: ordered disjoint intervals each
/// carrying a piece function, with a default value everywhere else.
template <typename V>
class PiecewiseAttribute {
public:
    struct Piece {
        TimeInterval span;
        PieceFunction<V> fn;
    };

    PiecewiseAttribute() = default;
    explicit PiecewiseAttribute(V default_value) : default_(std::move(default_value)) {}

    const V& default_value() const { return default_; }
    void set_default(V v) { default_ = std::move(v); }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    /// Insert a piece; rejected (returns false) if the interval is invalid or
    /// overlaps an existing piece.
    bool add(const TimeInterval& span, PieceFunction<V> fn) {
        if (!span.valid()) return false;
        for (const Piece& p : pieces_)
            if (overlaps(p.span, span)) return false;
        Piece piece{span, std::move(fn)};
        auto it = std::upper_bound(pieces_.begin(), pieces_.end(), piece,
                                   [](const Piece& a, const Piece& b) {
                                       return !start_not_after(b.span, a.span);
                                   });
        pieces_.insert(it, std::move(piece));
        return true;
    }

    /// Exact lookup honouring open/closed bounds.
    V value(double t) const {
        const Piece* p = find(t, /*sampling=*/false);
        return p ? p->fn.at(p->span, t) : default_;
    }

    /// Sampling lookup with half-open [start, end) piece membership, so each
    /// boundary instant belongs to exactly one piece.
    V sample(double t) const {
        const Piece* p = find(t, /*sampling=*/true);
        return p ? p->fn.at(p->span, t) : default_;
    }

    /// The piece whose interval contains t exactly, or null.
    const Piece* piece_at(double t) const { return find(t, false); }

private:
    const Piece* find(double t, bool sampling) const {
        // Pieces are disjoint and sorted by start, so only the last two
        // pieces starting at or before t can contain it.
        auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                                   [](double q, const Piece& p) { return q < p.span.start; });
        for (int back = 0; back < 2 && it != pieces_.begin(); ++back) {
            --it;
            const bool hit = sampling ? it->span.sample_contains(t) : it->span.contains(t);
            if (hit) return &*it;
        }
        return nullptr;
    }

    std::vector<Piece> pieces_;
    V default_{};
};

}  // namespace stcube
