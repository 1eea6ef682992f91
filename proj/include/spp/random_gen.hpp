#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spp/instance.hpp"
#include "spp/oracle.hpp"

namespace spp {

struct generation_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pairwise disjoint segments with small integer coordinates; per-segment
// rejection sampling against the accepted prefix.
inline Instance gen_random_disjoint_segments(std::size_t n, std::uint64_t seed, long spread = 24,
                                             Variant variant = {}) {
    if (n == 0) throw invalid_instance("n must be >= 1");
    detail::SplitMix64 rng(seed);
    Instance inst;
    inst.variant = variant;
    inst.kind = InstanceKind::Segments;
    const int cap = 20000;
    int attempts = 0;
    while (inst.segments.size() < n) {
        if (++attempts > cap) throw generation_failed("resampling cap exceeded");
        Point p(Rational(static_cast<long>(rng.below(spread + 1))), Rational(static_cast<long>(rng.below(spread + 1))));
        Point q(Rational(static_cast<long>(rng.below(spread + 1))), Rational(static_cast<long>(rng.below(spread + 1))));
        Segment s(p, q);
        if (s.zero_length()) continue;
        bool ok = true;
        for (const auto& t : inst.segments)
            if (segments_share_point(s, t)) { ok = false; break; }
        if (ok) inst.segments.push_back(s);
    }
    return inst;
}

// Unconstrained segments (crossings allowed).
inline Instance gen_random_segments(std::size_t n, std::uint64_t seed, long spread = 24, Variant variant = {}) {
    if (n == 0) throw invalid_instance("n must be >= 1");
    detail::SplitMix64 rng(seed);
    Instance inst;
    inst.variant = variant;
    inst.kind = InstanceKind::Segments;
    while (inst.segments.size() < n) {
        Point p(Rational(static_cast<long>(rng.below(spread + 1))), Rational(static_cast<long>(rng.below(spread + 1))));
        Point q(Rational(static_cast<long>(rng.below(spread + 1))), Rational(static_cast<long>(rng.below(spread + 1))));
        Segment s(p, q);
        if (s.zero_length()) continue;
        inst.segments.push_back(s);
    }
    return inst;
}

// Hull-disjoint islands grown inside separated grid cells.
inline Instance gen_random_islands(std::size_t num_islands, std::size_t max_points, std::uint64_t seed,
                                   long cell = 10, Variant variant = {}) {
    if (num_islands == 0 || max_points == 0) throw invalid_instance("need islands and points");
    detail::SplitMix64 rng(seed);
    Instance inst;
    inst.variant = variant;
    inst.kind = InstanceKind::Islands;
    std::size_t cols = 1;
    while (cols * cols < num_islands) ++cols;
    for (std::size_t i = 0; i < num_islands; ++i) {
        long cx = static_cast<long>(i % cols) * (cell + 3);
        long cy = static_cast<long>(i / cols) * (cell + 3);
        std::size_t k = 1 + rng.below(max_points);
        std::vector<Point> isl;
        int guard = 0;
        while (isl.size() < k && ++guard < 1000) {
            Point p(Rational(cx + static_cast<long>(rng.below(cell + 1))),
                    Rational(cy + static_cast<long>(rng.below(cell + 1))));
            bool dup = false;
            for (const auto& e : isl) dup = dup || e == p;
            if (!dup) isl.push_back(p);
        }
        inst.islands.push_back(std::move(isl));
    }
    return inst;
}

}  // namespace spp
