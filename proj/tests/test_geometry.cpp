#include <catch2/catch_amalgamated.hpp>

#include "spp/geometry.hpp"
#include "spp/hull.hpp"
#include "spp/oracle.hpp"

using namespace spp;

namespace {

Point pt(long x, long y) { return Point(Rational(x), Rational(y)); }

Point random_point(detail::SplitMix64& rng, long spread) {
    return Point(Rational(static_cast<long>(rng.below(spread))), Rational(static_cast<long>(rng.below(spread))));
}

}  // namespace

TEST_CASE("orient signs") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, -1)) == -1);
}

TEST_CASE("orient antisymmetry under argument swap") {
    detail::SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Point a = random_point(rng, 20), b = random_point(rng, 20), c = random_point(rng, 20);
        CHECK(orient(a, b, c) == -orient(b, a, c));
        CHECK(orient(a, b, c) == orient(b, c, a));
    }
}

TEST_CASE("segment intersection basic cases") {
    auto x = segment_intersection(Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0)));
    REQUIRE(std::holds_alternative<PointIntersection>(x));
    CHECK(std::get<PointIntersection>(x).p == pt(1, 1));

    auto e = segment_intersection(Segment(pt(0, 0), pt(1, 0)), Segment(pt(2, 0), pt(3, 0)));
    CHECK(std::holds_alternative<EmptyIntersection>(e));

    auto ov = segment_intersection(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)));
    REQUIRE(std::holds_alternative<OverlapIntersection>(ov));
    CHECK(std::get<OverlapIntersection>(ov).p == pt(1, 0));
    CHECK(std::get<OverlapIntersection>(ov).q == pt(2, 0));
}

TEST_CASE("segment intersection is symmetric") {
    detail::SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Segment s1(random_point(rng, 8), random_point(rng, 8));
        Segment s2(random_point(rng, 8), random_point(rng, 8));
        auto a = segment_intersection(s1, s2);
        auto b = segment_intersection(s2, s1);
        CHECK(a.index() == b.index());
        if (std::holds_alternative<PointIntersection>(a))
            CHECK(std::get<PointIntersection>(a).p == std::get<PointIntersection>(b).p);
        if (std::holds_alternative<OverlapIntersection>(a)) {
            CHECK(std::get<OverlapIntersection>(a).p == std::get<OverlapIntersection>(b).p);
            CHECK(std::get<OverlapIntersection>(a).q == std::get<OverlapIntersection>(b).q);
        }
    }
}

TEST_CASE("crossing vs touching") {
    CHECK(segments_cross(Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0))));
    // Shared endpoint touches but does not cross.
    CHECK(!segments_cross(Segment(pt(0, 0), pt(1, 1)), Segment(pt(1, 1), pt(2, 0))));
    // Endpoint on interior touches but does not cross.
    CHECK(!segments_cross(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(1, 5))));
    CHECK(segments_share_point(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(1, 5))));
}

TEST_CASE("convex hull basics") {
    auto h = convex_hull({pt(0, 0), pt(4, 0), pt(0, 3), pt(1, 1)});
    REQUIRE(h.size() == 3);
    CHECK(h[0] == pt(0, 0));
    CHECK(h[1] == pt(4, 0));
    CHECK(h[2] == pt(0, 3));

    auto single = convex_hull({pt(0, 0)});
    REQUIRE(single.size() == 1);

    auto pair = convex_hull({pt(0, 0), pt(2, 0), pt(1, 0)});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == pt(0, 0));
    CHECK(pair[1] == pt(2, 0));
}

TEST_CASE("convex hull invariant under permutation and duplication") {
    detail::SplitMix64 rng(99);
    for (int it = 0; it < 50; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(random_point(rng, 10));
        auto h1 = convex_hull(pts);
        std::vector<Point> shuffled = pts;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        shuffled.push_back(pts[0]);  // duplicate
        shuffled.push_back(pts.back());
        auto h2 = convex_hull(shuffled);
        CHECK(h1 == h2);
    }
}

TEST_CASE("hull area equals triangle fan exactly") {
    detail::SplitMix64 rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 10; ++i) pts.push_back(random_point(rng, 15));
        auto h = convex_hull(pts);
        if (h.size() < 3) continue;
        Rational fan(0);
        for (std::size_t i = 1; i + 1 < h.size(); ++i)
            fan += cross(h[i] - h[0], h[i + 1] - h[0]) / 2;
        CHECK(cmp(hull_area(h), fan) == 0);
    }
}

TEST_CASE("point in convex polygon") {
    auto h = convex_hull({pt(0, 0), pt(4, 0), pt(0, 3)});
    CHECK(point_in_convex_polygon(pt(1, 1), h) == Containment::Inside);
    CHECK(point_in_convex_polygon(pt(2, 0), h) == Containment::OnBoundary);
    CHECK(point_in_convex_polygon(pt(5, 5), h) == Containment::Outside);
}
