#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spp/geometry.hpp"
#include "spp/radical_sum.hpp"

namespace spp {

// Counterclockwise hull cycle with a minimal vertex set, starting at the
// lexicographically smallest vertex. Degenerate inputs yield a single point
// or the two extremes of a collinear set.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull of empty set");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n == 1) return pts;
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    return h;
}

// Closed-boundary traversal: a single point has perimeter 0, a collinear pair
// contributes its length twice.
inline RadicalSum hull_perimeter(const std::vector<Point>& hull) {
    RadicalSum sum;
    const std::size_t k = hull.size();
    if (k < 2) return sum;
    for (std::size_t i = 0; i < k; ++i)
        sum.add_sqrt(squared_distance(hull[i], hull[(i + 1) % k]));
    return sum;
}

inline Rational hull_area(const std::vector<Point>& hull) {
    const std::size_t k = hull.size();
    if (k < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < k; ++i)
        twice += cross(hull[i], hull[(i + 1) % k]);
    return twice / 2;
}

enum class Containment { Inside, OnBoundary, Outside };

inline Containment point_in_convex_polygon(const Point& p, const std::vector<Point>& hull) {
    const std::size_t k = hull.size();
    if (k == 0) throw std::invalid_argument("empty hull");
    if (k == 1) return p == hull[0] ? Containment::OnBoundary : Containment::Outside;
    if (k == 2)
        return point_on_segment(hull[0], hull[1], p) ? Containment::OnBoundary : Containment::Outside;
    bool boundary = false;
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % k];
        int o = orient(a, b, p);
        if (o < 0) return Containment::Outside;
        if (o == 0 && collinear_point_on_segment(a, b, p)) boundary = true;
    }
    return boundary ? Containment::OnBoundary : Containment::Inside;
}

}  // namespace spp
