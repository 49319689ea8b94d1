#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace stcube {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
};

/// A point in the space-time cube: two spatial coordinates and one time coordinate.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double t_) : x(x_), y(y_), t(t_) {}
    Vec3(const Vec2& p, double t_) : x(p.x), y(p.y), t(t_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, t + o.t}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, t - o.t}; }
    Vec3 operator*(double s) const { return {x * s, y * s, t * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, t / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; t += o.t; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; t -= o.t; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + t * o.t; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }

    Vec3 cross(const Vec3& o) const {
        return {y * o.t - t * o.y, t * o.x - x * o.t, x * o.y - y * o.x};
    }

    /// Drop the time coordinate.
    Vec2 planar() const { return {x, y}; }

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && t == o.t; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

inline Vec2 lerp(const Vec2& a, const Vec2& b, double f) {
    if (f <= 0.0) return a;
    if (f >= 1.0) return b;
    return {a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f};
}

inline Vec3 lerp(const Vec3& a, const Vec3& b, double f) {
    if (f <= 0.0) return a;
    if (f >= 1.0) return b;
    return {a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f, a.t + (b.t - a.t) * f};
}

inline double lerp(double a, double b, double f) {
    if (f <= 0.0) return a;
    if (f >= 1.0) return b;
    return a + (b - a) * f;
}

/// 3D axis-aligned bounding box.
struct Box3 {
    Vec3 lo{std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi{-std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

    static Box3 of(const Vec3& a, const Vec3& b) {
        Box3 box;
        box.expand(a);
        box.expand(b);
        return box;
    }

    bool valid() const { return lo.x <= hi.x; }

    void expand(const Vec3& p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.t = std::min(lo.t, p.t);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.t = std::max(hi.t, p.t);
    }

    void expand(const Box3& o) {
        if (!o.valid()) return;
        expand(o.lo);
        expand(o.hi);
    }

    Box3 inflated(double r) const {
        Box3 box = *this;
        box.lo.x -= r; box.lo.y -= r; box.lo.t -= r;
        box.hi.x += r; box.hi.y += r; box.hi.t += r;
        return box;
    }

    bool intersects(const Box3& o) const {
        return lo.x <= o.hi.x && o.lo.x <= hi.x &&
               lo.y <= o.hi.y && o.lo.y <= hi.y &&
               lo.t <= o.hi.t && o.lo.t <= hi.t;
    }
};

/// Parameter s in [0,1] of the point on segment c->d closest to a.
inline double project_on_segment(const Vec3& a, const Vec3& c, const Vec3& d) {
    const Vec3 cd = d - c;
    const double len_sq = cd.norm_sq();
    if (len_sq <= 0.0) return 0.0;
    return std::clamp((a - c).dot(cd) / len_sq, 0.0, 1.0);
}

inline double point_segment_distance(const Vec3& a, const Vec3& c, const Vec3& d) {
    const double s = project_on_segment(a, c, d);
    return (a - lerp(c, d, s)).norm();
}

/// Minimum distance between segments p0->p1 and q0->q1 (clamped quadratic).
inline double segment_segment_distance(const Vec3& p0, const Vec3& p1,
                                       const Vec3& q0, const Vec3& q1) {
    const Vec3 u = p1 - p0;
    const Vec3 v = q1 - q0;
    const Vec3 w = p0 - q0;
    const double a = u.dot(u);
    const double b = u.dot(v);
    const double c = v.dot(v);
    const double d = u.dot(w);
    const double e = v.dot(w);
    const double denom = a * c - b * b;

    double s = 0.0;
    if (denom > 1e-14 * a * c + 1e-300) {
        s = std::clamp((b * e - c * d) / denom, 0.0, 1.0);
    }
    double t = (c > 0.0) ? std::clamp((b * s + e) / c, 0.0, 1.0) : 0.0;
    // Re-clamp s for the chosen t; one extra pass fixes boundary cases.
    s = (a > 0.0) ? std::clamp((b * t - d) / a, 0.0, 1.0) : 0.0;
    t = (c > 0.0) ? std::clamp((b * s + e) / c, 0.0, 1.0) : 0.0;

    return ((p0 + u * s) - (q0 + v * t)).norm();
}

/// True when a, c, d lie (numerically) on one line.
inline bool collinear(const Vec3& a, const Vec3& c, const Vec3& d) {
    const Vec3 ca = a - c;
    const Vec3 cd = d - c;
    const double cross_sq = ca.cross(cd).norm_sq();
    const double scale = ca.norm_sq() * cd.norm_sq();
    return cross_sq <= 1e-24 * scale;
}

}  // namespace stcube
