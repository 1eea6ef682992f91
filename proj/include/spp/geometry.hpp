#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "spp/rational.hpp"

namespace spp {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic order, x first.
inline bool lex_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
}

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point scale(const Point& p, const Rational& k) { return {p.x * k, p.y * k}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

inline Rational squared_distance(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// +1 if c is strictly left of the directed line a->b, -1 strictly right, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sign(cross(b - a, c - a));
}

// An ordered pair of endpoints; p == q encodes a zero-length segment.
struct Segment {
    Point p;
    Point q;

    Segment() = default;
    Segment(Point a, Point b) : p(std::move(a)), q(std::move(b)) {}

    bool zero_length() const { return p == q; }
    const Point& endpoint(int idx) const { return idx == 0 ? p : q; }
    bool operator==(const Segment& o) const { return p == o.p && q == o.q; }
};

// c collinear with [a,b] assumed; is c within the closed box spanned by a,b?
inline bool collinear_point_on_segment(const Point& a, const Point& b, const Point& c) {
    if (cmp(std::min(a.x, b.x), c.x) > 0 || cmp(c.x, std::max(a.x, b.x)) > 0) return false;
    if (cmp(std::min(a.y, b.y), c.y) > 0 || cmp(c.y, std::max(a.y, b.y)) > 0) return false;
    return true;
}

inline bool point_on_segment(const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) == 0 && collinear_point_on_segment(a, b, c);
}

// Is c strictly between a and b on the segment (collinearity not assumed)?
inline bool point_in_open_segment(const Point& a, const Point& b, const Point& c) {
    if (c == a || c == b) return false;
    return point_on_segment(a, b, c);
}

struct EmptyIntersection {};
struct PointIntersection { Point p; };
struct OverlapIntersection { Point p; Point q; };  // endpoints of the shared sub-segment
using SegmentIntersection = std::variant<EmptyIntersection, PointIntersection, OverlapIntersection>;

namespace detail {

// Overlap of two collinear segments as a closed interval, empty if disjoint.
inline SegmentIntersection collinear_overlap(const Segment& s1, const Segment& s2) {
    // Order points along the common line by lexicographic order.
    Point a = s1.p, b = s1.q;
    if (lex_less(b, a)) std::swap(a, b);
    Point c = s2.p, d = s2.q;
    if (lex_less(d, c)) std::swap(c, d);
    const Point& lo = lex_less(a, c) ? c : a;
    const Point& hi = lex_less(d, b) ? d : b;
    if (lex_less(hi, lo)) return EmptyIntersection{};
    if (hi == lo) return PointIntersection{lo};
    return OverlapIntersection{lo, hi};
}

}  // namespace detail

// Exact intersection of two closed segments, distinguishing the empty case,
// a single point (crossing or touch), and collinear overlap.
inline SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    if (s1.zero_length() && s2.zero_length())
        return s1.p == s2.p ? SegmentIntersection(PointIntersection{s1.p}) : SegmentIntersection(EmptyIntersection{});
    if (s1.zero_length())
        return point_on_segment(s2.p, s2.q, s1.p) ? SegmentIntersection(PointIntersection{s1.p})
                                                  : SegmentIntersection(EmptyIntersection{});
    if (s2.zero_length())
        return point_on_segment(s1.p, s1.q, s2.p) ? SegmentIntersection(PointIntersection{s2.p})
                                                  : SegmentIntersection(EmptyIntersection{});

    int o1 = orient(s1.p, s1.q, s2.p);
    int o2 = orient(s1.p, s1.q, s2.q);
    int o3 = orient(s2.p, s2.q, s1.p);
    int o4 = orient(s2.p, s2.q, s1.q);

    if (o1 == 0 && o2 == 0) return detail::collinear_overlap(s1, s2);

    if (o1 * o2 <= 0 && o3 * o4 <= 0) {
        // Touching via an endpoint on the other segment.
        if (o1 == 0 && collinear_point_on_segment(s1.p, s1.q, s2.p)) return PointIntersection{s2.p};
        if (o2 == 0 && collinear_point_on_segment(s1.p, s1.q, s2.q)) return PointIntersection{s2.q};
        if (o3 == 0 && collinear_point_on_segment(s2.p, s2.q, s1.p)) return PointIntersection{s1.p};
        if (o4 == 0 && collinear_point_on_segment(s2.p, s2.q, s1.q)) return PointIntersection{s1.q};
        if (o1 * o2 < 0 && o3 * o4 < 0) {
            // Proper crossing; solve s1.p + t*(s1.q - s1.p).
            Point r = s1.q - s1.p, s = s2.q - s2.p;
            Rational denom = cross(r, s);
            Rational t = cross(s2.p - s1.p, s) / denom;
            return PointIntersection{s1.p + scale(r, t)};
        }
        return EmptyIntersection{};
    }
    return EmptyIntersection{};
}

inline bool segments_share_point(const Segment& s1, const Segment& s2) {
    return !std::holds_alternative<EmptyIntersection>(segment_intersection(s1, s2));
}

// Interior point in common (single proper crossing or collinear overlap of
// positive length counts; endpoint touches do not).
inline bool segments_cross(const Segment& s1, const Segment& s2) {
    auto isect = segment_intersection(s1, s2);
    if (std::holds_alternative<EmptyIntersection>(isect)) return false;
    if (std::holds_alternative<OverlapIntersection>(isect)) return true;
    const Point& p = std::get<PointIntersection>(isect).p;
    bool interior1 = s1.zero_length() ? false : point_in_open_segment(s1.p, s1.q, p);
    bool interior2 = s2.zero_length() ? false : point_in_open_segment(s2.p, s2.q, p);
    return interior1 && interior2;
}

// Intersection point of the segment [p,q] with the ray a + t*(b-a), t >= 0,
// only reported when it is a single point.
inline bool segment_intersects_ray(const Point& p, const Point& q, const Point& a, const Point& b) {
    Point dir = b - a;
    // Treat the ray as a very long segment: compute an explicit far endpoint.
    // Exact arithmetic: pick a scale that outruns the segment's coordinates.
    Rational reach(1);
    auto widen = [&reach](const Rational& v) {
        Rational m = abs(v);
        if (cmp(m, reach) > 0) reach = m;
    };
    widen(p.x); widen(p.y); widen(q.x); widen(q.y);
    widen(a.x); widen(a.y); widen(b.x); widen(b.y);
    Rational span = reach * 8 + 8;
    Rational d2 = dot(dir, dir);
    // t such that |t*dir| certainly exceeds span: t = span^2 / d2 + 1 is overkill but exact.
    Rational t = span * span / d2 + span + 1;
    Segment far_seg(a, a + scale(dir, t));
    return segments_share_point(Segment(p, q), far_seg);
}

}  // namespace spp
