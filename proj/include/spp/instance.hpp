#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spp/geometry.hpp"
#include "spp/hull.hpp"
#include "spp/radical_sum.hpp"

namespace spp {

enum class Objective { Perimeter, Area };
enum class Direction { Minimize, Maximize };

struct Variant {
    Objective objective = Objective::Perimeter;
    Direction direction = Direction::Minimize;

    bool operator==(const Variant&) const = default;
};

inline std::string variant_name(Variant v) {
    std::string s = v.direction == Direction::Minimize ? "min-" : "max-";
    s += v.objective == Objective::Perimeter ? "perimeter" : "area";
    return s;
}

inline Variant variant_from_name(const std::string& name) {
    if (name == "min-perimeter") return {Objective::Perimeter, Direction::Minimize};
    if (name == "min-area") return {Objective::Area, Direction::Minimize};
    if (name == "max-perimeter") return {Objective::Perimeter, Direction::Maximize};
    if (name == "max-area") return {Objective::Area, Direction::Maximize};
    throw io_error("unknown variant: " + name);
}

struct invalid_instance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InstanceKind { Segments, Islands };

// A stabbing-polygon problem instance: a variant plus either segments or
// islands of points. Islands must be nonempty.
struct Instance {
    Variant variant;
    InstanceKind kind = InstanceKind::Segments;
    std::vector<Segment> segments;                  // kind == Segments
    std::vector<std::vector<Point>> islands;        // kind == Islands

    std::size_t size() const {
        return kind == InstanceKind::Segments ? segments.size() : islands.size();
    }

    // Number of selectable points of element i (distinct locations).
    std::size_t choices(std::size_t i) const {
        if (kind == InstanceKind::Segments) return segments[i].zero_length() ? 1 : 2;
        return islands[i].size();
    }

    Point element_point(std::size_t i, std::size_t pick) const {
        if (kind == InstanceKind::Segments) return segments[i].endpoint(static_cast<int>(pick));
        return islands[i][pick];
    }

    void check_well_formed() const {
        if (size() == 0) throw invalid_instance("instance has no elements");
        if (kind == InstanceKind::Islands)
            for (const auto& isl : islands)
                if (isl.empty()) throw invalid_instance("empty island");
    }

    bool operator==(const Instance& o) const {
        return variant == o.variant && kind == o.kind && segments == o.segments && islands == o.islands;
    }
};

struct Selection {
    std::vector<std::uint32_t> picks;  // per element: endpoint index / island point index

    bool operator==(const Selection&) const = default;
    bool operator<(const Selection& o) const { return picks < o.picks; }
};

struct Solution {
    Selection selection;
    std::vector<Point> hull;
    RadicalSum perimeter;
    Rational area{0};
    std::string solver;
};

struct DisjointnessReport {
    bool pairwise_disjoint = false;
    std::set<std::size_t> crossing_elements;  // the k of the FPT observation
    bool island_hulls_disjoint = false;
};

namespace detail {

inline bool hulls_intersect(const std::vector<Point>& h1, const std::vector<Point>& h2) {
    // Convex regions intersect iff an edge pair meets or one contains the other.
    auto edges_of = [](const std::vector<Point>& h) {
        std::vector<Segment> es;
        if (h.size() == 1) es.emplace_back(h[0], h[0]);
        else if (h.size() == 2) es.emplace_back(h[0], h[1]);
        else
            for (std::size_t i = 0; i < h.size(); ++i) es.emplace_back(h[i], h[(i + 1) % h.size()]);
        return es;
    };
    for (const auto& e1 : edges_of(h1))
        for (const auto& e2 : edges_of(h2))
            if (segments_share_point(e1, e2)) return true;
    if (point_in_convex_polygon(h1[0], h2) != Containment::Outside) return true;
    if (point_in_convex_polygon(h2[0], h1) != Containment::Outside) return true;
    return false;
}

}  // namespace detail

// Exact disjointness analysis. Segments sharing even one point are not
// pairwise disjoint; island mode checks pairwise hull disjointness.
inline DisjointnessReport validate(const Instance& inst) {
    inst.check_well_formed();
    DisjointnessReport rep;
    if (inst.kind == InstanceKind::Segments) {
        const auto& segs = inst.segments;
        for (std::size_t i = 0; i < segs.size(); ++i)
            for (std::size_t j = i + 1; j < segs.size(); ++j)
                if (segments_share_point(segs[i], segs[j])) {
                    rep.crossing_elements.insert(i);
                    rep.crossing_elements.insert(j);
                }
        rep.pairwise_disjoint = rep.crossing_elements.empty();
        rep.island_hulls_disjoint = rep.pairwise_disjoint;
    } else {
        std::vector<std::vector<Point>> hulls;
        hulls.reserve(inst.islands.size());
        for (const auto& isl : inst.islands) hulls.push_back(convex_hull(isl));
        rep.island_hulls_disjoint = true;
        for (std::size_t i = 0; i < hulls.size(); ++i)
            for (std::size_t j = i + 1; j < hulls.size(); ++j)
                if (detail::hulls_intersect(hulls[i], hulls[j])) {
                    rep.island_hulls_disjoint = false;
                    rep.crossing_elements.insert(i);
                    rep.crossing_elements.insert(j);
                }
        rep.pairwise_disjoint = rep.island_hulls_disjoint;
    }
    return rep;
}

// Builds the hull of the selected points, computes both measures, and asserts
// the stabbing property (every element keeps at least one point inside).
inline Solution check_solution(const Instance& inst, const Selection& sel, std::string solver = "manual") {
    inst.check_well_formed();
    if (sel.picks.size() != inst.size()) throw invalid_instance("selection size mismatch");
    std::vector<Point> chosen;
    chosen.reserve(sel.picks.size());
    for (std::size_t i = 0; i < sel.picks.size(); ++i) {
        if (sel.picks[i] >= inst.choices(i) && !(inst.kind == InstanceKind::Segments && sel.picks[i] < 2))
            throw invalid_instance("selection index out of range at element " + std::to_string(i));
        chosen.push_back(inst.element_point(i, sel.picks[i]));
    }
    Solution sol;
    sol.selection = sel;
    sol.hull = convex_hull(chosen);
    sol.perimeter = hull_perimeter(sol.hull);
    sol.area = hull_area(sol.hull);
    sol.solver = std::move(solver);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        bool stabbed = false;
        for (std::size_t c = 0; c < inst.choices(i) && !stabbed; ++c)
            stabbed = point_in_convex_polygon(inst.element_point(i, c), sol.hull) != Containment::Outside;
        if (!stabbed) throw invalid_instance("element " + std::to_string(i) + " not stabbed");
    }
    return sol;
}

}  // namespace spp
