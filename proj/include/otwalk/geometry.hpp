#pragma once

#include "otwalk/error.hpp"
#include "otwalk/rational.hpp"

#include <optional>
#include <utility>

namespace otwalk {

// Orientation of an ordered point triple: left turn, collinear, right turn.
enum class Orientation : char { left = 'L', collinear = 'C', right = 'R' };

inline Orientation negate(Orientation o) {
    switch (o) {
        case Orientation::left: return Orientation::right;
        case Orientation::right: return Orientation::left;
        default: return Orientation::collinear;
    }
}

inline char to_char(Orientation o) { return static_cast<char>(o); }

inline std::optional<Orientation> orientation_from_char(char c) {
    switch (c) {
        case 'L': case 'l': return Orientation::left;
        case 'R': case 'r': return Orientation::right;
        case 'C': case 'c': return Orientation::collinear;
        default: return std::nullopt;
    }
}

inline Orientation orientation_of_sign(int s) {
    if (s > 0) return Orientation::left;
    if (s < 0) return Orientation::right;
    return Orientation::collinear;
}

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& other) const { return x == other.x && y == other.y; }
    bool operator!=(const Point& other) const { return !(*this == other); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational vec_dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational vec_cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Point rot90(const Point& v) { return Point{-v.y, v.x}; }

// Exact cross product (b - a) x (c - a).
inline Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace detail {
// Numerator of r - s over the (positive) denominator product, avoiding
// rational normalization on the hot path.
inline void diff_parts(const Rational& r, const Rational& s, BigInt& num, BigInt& den) {
    num = numerator(r) * denominator(s) - numerator(s) * denominator(r);
    den = denominator(r) * denominator(s);
}
}  // namespace detail

// Sign of cross(a, b, c), evaluated over integers with denominators cleared.
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
    BigInt n1, d1, n2, d2, n3, d3, n4, d4;
    detail::diff_parts(b.x, a.x, n1, d1);
    detail::diff_parts(c.y, a.y, n2, d2);
    detail::diff_parts(b.y, a.y, n3, d3);
    detail::diff_parts(c.x, a.x, n4, d4);
    BigInt lhs = n1 * n2 * d3 * d4;
    BigInt rhs = n3 * n4 * d1 * d2;
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

inline Orientation orient(const Point& a, const Point& b, const Point& c) {
    return orientation_of_sign(orient_sign(a, b, c));
}

enum class TriangleRegion { interior, boundary, exterior };

// Region of p relative to the closed triangle (a, b, c); either winding works.
inline TriangleRegion point_in_triangle(const Point& p, const Point& a, const Point& b,
                                        const Point& c) {
    int base = orient_sign(a, b, c);
    if (base == 0) throw Failure("degenerate-triangle", "triangle corners are collinear");
    int s1 = orient_sign(a, b, p) * base;
    int s2 = orient_sign(b, c, p) * base;
    int s3 = orient_sign(c, a, p) * base;
    if (s1 > 0 && s2 > 0 && s3 > 0) return TriangleRegion::interior;
    if (s1 < 0 || s2 < 0 || s3 < 0) return TriangleRegion::exterior;
    return TriangleRegion::boundary;
}

enum class SegmentRelation {
    disjoint,
    shared_endpoint_only,
    proper_crossing,
    endpoint_in_interior,
    improper_overlap,
};

namespace detail {
/// For collinear p, q, r: is r within the closed segment pq?
inline bool within_collinear(const Point& p, const Point& q, const Point& r) {
    if (p.x != q.x) {
        return (r.x >= p.x && r.x <= q.x) || (r.x >= q.x && r.x <= p.x);
    }
    return (r.y >= p.y && r.y <= q.y) || (r.y >= q.y && r.y <= p.y);
}
}  // namespace detail

// Exact classification of how two non-degenerate closed segments intersect.
inline SegmentRelation segments_cross(const Point& p1, const Point& q1, const Point& p2,
                                      const Point& q2) {
    if (p1 == q1 || p2 == q2) {
        throw Failure("degenerate-segment", "segment endpoints coincide");
    }
    int d1 = orient_sign(p1, q1, p2);
    int d2 = orient_sign(p1, q1, q2);
    int d3 = orient_sign(p2, q2, p1);
    int d4 = orient_sign(p2, q2, q1);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // One common supporting line: interval arithmetic along it. The line is
        // non-vertical iff the first segment varies in x (then so does the other).
        bool use_x = (p1.x != q1.x);
        auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
        Rational lo1 = key(p1), hi1 = key(q1);
        if (lo1 > hi1) std::swap(lo1, hi1);
        Rational lo2 = key(p2), hi2 = key(q2);
        if (lo2 > hi2) std::swap(lo2, hi2);
        Rational lo = lo1 > lo2 ? lo1 : lo2;
        Rational hi = hi1 < hi2 ? hi1 : hi2;
        if (lo > hi) return SegmentRelation::disjoint;
        // A single shared coordinate is an endpoint of both segments.
        if (lo == hi) return SegmentRelation::shared_endpoint_only;
        return SegmentRelation::improper_overlap;
    }

    bool share_endpoint = (p1 == p2) || (p1 == q2) || (q1 == p2) || (q1 == q2);
    if (share_endpoint) {
        // Not collinear, so the shared endpoint is the whole intersection.
        return SegmentRelation::shared_endpoint_only;
    }
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return SegmentRelation::proper_crossing;
    }
    if (d1 == 0 && detail::within_collinear(p1, q1, p2)) return SegmentRelation::endpoint_in_interior;
    if (d2 == 0 && detail::within_collinear(p1, q1, q2)) return SegmentRelation::endpoint_in_interior;
    if (d3 == 0 && detail::within_collinear(p2, q2, p1)) return SegmentRelation::endpoint_in_interior;
    if (d4 == 0 && detail::within_collinear(p2, q2, q1)) return SegmentRelation::endpoint_in_interior;
    return SegmentRelation::disjoint;
}

// Affine map q = A * p + t with A = [[a, b], [c, d]].
struct AffineMap {
    Rational a{1}, b{0}, c{0}, d{1};
    Rational tx{0}, ty{0};

    Point apply(const Point& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    Rational det() const { return a * d - b * c; }
};

// The unique affine map sending (s1, s2, s3) to (t1, t2, t3); the source
// triple must be non-collinear.
inline AffineMap affine_map_three(const Point& s1, const Point& s2, const Point& s3,
                                  const Point& t1, const Point& t2, const Point& t3) {
    Point u = s2 - s1, v = s3 - s1;
    Rational det = u.x * v.y - u.y * v.x;
    if (det == 0) throw Failure("degenerate-source", "source triple is collinear");
    Point du = t2 - t1, dv = t3 - t1;
    AffineMap m;
    m.a = (du.x * v.y - dv.x * u.y) / det;
    m.b = (dv.x * u.x - du.x * v.x) / det;
    m.c = (du.y * v.y - dv.y * u.y) / det;
    m.d = (dv.y * u.x - du.y * v.x) / det;
    m.tx = t1.x - (m.a * s1.x + m.b * s1.y);
    m.ty = t1.y - (m.c * s1.x + m.d * s1.y);
    return m;
}

}  // namespace otwalk
