#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spp/instance.hpp"

namespace spp {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::uint64_t budget = 1u << 20;
    int precision_bits = 256;
};

namespace detail {

// Deterministic cross-platform generator (splitmix64).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d9e49a109fbe3ull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct ObjectiveBest {
    bool has = false;
    RadicalSum perimeter;
    Rational area{0};
    Selection selection;

    // Returns true if cand strictly improves on the stored best for the variant.
    bool improves(const Instance& inst, const RadicalSum& per, const Rational& ar, int bits) const {
        if (!has) return true;
        if (inst.variant.objective == Objective::Area) {
            int c = cmp(ar, area);
            return inst.variant.direction == Direction::Minimize ? c < 0 : c > 0;
        }
        auto ord = RadicalSum::compare(per, perimeter, bits);
        if (ord == RadicalSum::Order::Tie) return false;
        return inst.variant.direction == Direction::Minimize ? ord == RadicalSum::Order::Less
                                                             : ord == RadicalSum::Order::Greater;
    }
};

}  // namespace detail

// Ground-truth solver: enumerates every selection in mixed-radix (lexicographic)
// order and keeps the best objective; ties keep the lexicographically smallest
// selection vector. Zero-length segments contribute a single canonical choice.
inline Solution solve_exhaustive(const Instance& inst, const OracleOptions& opt = {}) {
    inst.check_well_formed();
    const std::size_t n = inst.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t c = inst.choices(i);
        if (c == 0) throw invalid_instance("element with no choices");
        if (total > opt.budget / c) throw budget_exceeded("selection space exceeds oracle budget");
        total *= c;
    }

    std::vector<std::uint32_t> picks(n, 0);
    detail::ObjectiveBest best;
    std::vector<Point> chosen(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) chosen[i] = inst.element_point(i, picks[i]);
        auto hull = convex_hull(chosen);
        RadicalSum per;
        Rational ar{0};
        if (inst.variant.objective == Objective::Perimeter) per = hull_perimeter(hull);
        else ar = hull_area(hull);
        if (best.improves(inst, per, ar, opt.precision_bits)) {
            best.has = true;
            best.perimeter = per;
            best.area = ar;
            best.selection.picks = picks;
        }
        // Odometer, rightmost fastest => lexicographic enumeration order.
        std::size_t i = n;
        while (i-- > 0) {
            if (++picks[i] < inst.choices(i)) break;
            picks[i] = 0;
            if (i == 0) return check_solution(inst, best.selection, "oracle");
        }
    }
}

// Empirical witness for the endpoint-restriction lemma: the best objective over
// random points chosen inside each segment, deterministic for a given seed.
// Returns the pair (perimeter objective, area objective) of the best sampled
// selection for the instance's variant.
struct SampledObjective {
    RadicalSum perimeter;
    Rational area{0};
};

inline SampledObjective max_over_interior_samples(const Instance& inst, int samples_per_element,
                                                  std::uint64_t seed, int precision_bits = 256) {
    if (inst.kind != InstanceKind::Segments) throw invalid_instance("interior sampling needs segments");
    detail::SplitMix64 rng(seed);
    SampledObjective best;
    bool has = false;
    const std::size_t n = inst.segments.size();
    for (int round = 0; round < samples_per_element; ++round) {
        std::vector<Point> pts;
        pts.reserve(n);
        for (const auto& s : inst.segments) {
            Rational t(static_cast<long>(rng.next() & 0xffff), 65536L);
            t.canonicalize();
            pts.push_back(s.p + scale(s.q - s.p, t));
        }
        auto hull = convex_hull(pts);
        RadicalSum per = hull_perimeter(hull);
        Rational ar = hull_area(hull);
        bool better;
        if (!has) {
            better = true;
        } else if (inst.variant.objective == Objective::Area) {
            better = cmp(ar, best.area) > 0;
        } else {
            better = RadicalSum::compare(per, best.perimeter, precision_bits) == RadicalSum::Order::Greater;
        }
        if (better) {
            has = true;
            best.perimeter = per;
            best.area = ar;
        }
    }
    return best;
}

}  // namespace spp
