#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spp/instance.hpp"

namespace spp {

struct work_limit_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ineligible_instance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    int precision_bits = 256;        // escalation cap for perimeter comparisons
    std::uint64_t work_limit = 50'000'000;  // cap on distinct subproblem keys
    int threads = 1;
    bool memoize = true;
    std::ostream* trace = nullptr;   // one line per solved subproblem when set
};

// Objective value carrying both measures; only the variant's measure is
// meaningful for comparisons.
struct ObjectiveValue {
    RadicalSum perimeter;
    Rational area{0};
};

inline ObjectiveValue objective_of_hull(const std::vector<Point>& hull) {
    return {hull_perimeter(hull), hull_area(hull)};
}

// Strict improvement of cand over best under the variant's direction.
inline bool objective_improves(const Variant& v, const ObjectiveValue& cand, const ObjectiveValue& best,
                               int bits) {
    if (v.objective == Objective::Area) {
        int c = cmp(cand.area, best.area);
        return v.direction == Direction::Minimize ? c < 0 : c > 0;
    }
    auto ord = RadicalSum::compare(cand.perimeter, best.perimeter, bits);
    if (ord == RadicalSum::Order::Tie) return false;
    return v.direction == Direction::Minimize ? ord == RadicalSum::Order::Less
                                              : ord == RadicalSum::Order::Greater;
}

inline bool objective_ties(const Variant& v, const ObjectiveValue& a, const ObjectiveValue& b, int bits) {
    if (v.objective == Objective::Area) return cmp(a.area, b.area) == 0;
    return RadicalSum::compare(a.perimeter, b.perimeter, bits) == RadicalSum::Order::Tie;
}

// Best-solution accumulator with deterministic tie handling: ties keep the
// earlier candidate unless the newcomer has a lexicographically smaller
// selection vector.
struct BestTracker {
    std::optional<Solution> best;

    void offer(const Instance& inst, Solution cand, int bits) {
        if (!best) { best = std::move(cand); return; }
        ObjectiveValue cv{cand.perimeter, cand.area};
        ObjectiveValue bv{best->perimeter, best->area};
        if (objective_improves(inst.variant, cv, bv, bits)) {
            best = std::move(cand);
        } else if (objective_ties(inst.variant, cv, bv, bits) && cand.selection < best->selection) {
            best = std::move(cand);
        }
    }
};

namespace detail {

// Smallest-span pick per element along a line: classic sliding window over the
// sorted multiset of (position, element) pairs.
inline std::optional<std::vector<std::uint32_t>> min_span_picks(
    const std::vector<std::vector<std::pair<Rational, std::uint32_t>>>& options) {
    struct Entry { Rational t; std::size_t elem; std::uint32_t pick; };
    std::vector<Entry> all;
    for (std::size_t e = 0; e < options.size(); ++e)
        for (const auto& [t, idx] : options[e]) all.push_back({t, e, idx});
    if (all.empty()) return std::nullopt;
    std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return cmp(a.t, b.t) < 0; });
    const std::size_t n = options.size();
    std::vector<int> count(n, 0);
    std::size_t covered = 0, lo = 0;
    std::optional<Rational> best_span;
    std::size_t best_lo = 0, best_hi = 0;
    for (std::size_t hi = 0; hi < all.size(); ++hi) {
        if (count[all[hi].elem]++ == 0) ++covered;
        while (covered == n) {
            Rational span = all[hi].t - all[lo].t;
            if (!best_span || cmp(span, *best_span) < 0) {
                best_span = span;
                best_lo = lo;
                best_hi = hi;
            }
            if (--count[all[lo].elem] == 0) --covered;
            ++lo;
        }
    }
    if (!best_span) return std::nullopt;
    std::vector<std::uint32_t> picks(n, 0);
    std::vector<bool> have(n, false);
    for (std::size_t i = best_lo; i <= best_hi; ++i) {
        auto& e = all[i];
        if (!have[e.elem]) { have[e.elem] = true; picks[e.elem] = e.pick; }
    }
    return picks;
}

}  // namespace detail

// Best solution whose selected points are all collinear (covers every
// hull-degenerate optimum: single points, nearest/farthest pairs, collinear
// chains). Enumerate lines spanned by point pairs; per line pick positions by
// a sliding window (min) or an extreme pair (max).
inline std::optional<Solution> solve_collinear_candidates(const Instance& inst, const SolverOptions& opt,
                                                          const char* solver_tag) {
    inst.check_well_formed();
    const std::size_t n = inst.size();
    BestTracker tracker;
    if (n == 1) {
        Selection sel;
        sel.picks = {0};
        tracker.offer(inst, check_solution(inst, sel, solver_tag), opt.precision_bits);
        return tracker.best;
    }
    std::vector<Point> pool;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < inst.choices(i); ++c) pool.push_back(inst.element_point(i, c));

    std::vector<std::pair<Point, Point>> lines;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            if (pool[i] != pool[j]) lines.emplace_back(pool[i], pool[j]);

    for (const auto& [a, b] : lines) {
        Point dir = b - a;
        // options[e] = (position along the line, pick index) for on-line choices
        std::vector<std::vector<std::pair<Rational, std::uint32_t>>> options(n);
        bool feasible = true;
        for (std::size_t e = 0; e < n && feasible; ++e) {
            for (std::uint32_t c = 0; c < inst.choices(e); ++c) {
                Point p = inst.element_point(e, c);
                if (orient(a, b, p) == 0) options[e].emplace_back(dot(p - a, dir), c);
            }
            feasible = !options[e].empty();
        }
        if (!feasible) continue;

        Selection sel;
        sel.picks.assign(n, 0);
        if (inst.variant.direction == Direction::Minimize) {
            if (inst.variant.objective == Objective::Area) {
                for (std::size_t e = 0; e < n; ++e) sel.picks[e] = options[e][0].second;
            } else {
                auto picks = detail::min_span_picks(options);
                if (!picks) continue;
                sel.picks = *picks;
            }
        } else {
            // Maximize the span: best pair (max over i of tmax_i) - (min over j!=i of tmin_j).
            std::vector<std::pair<Rational, std::uint32_t>> tmin(n), tmax(n);
            for (std::size_t e = 0; e < n; ++e) {
                tmin[e] = *std::min_element(options[e].begin(), options[e].end(),
                                            [](auto& x, auto& y) { return cmp(x.first, y.first) < 0; });
                tmax[e] = *std::max_element(options[e].begin(), options[e].end(),
                                            [](auto& x, auto& y) { return cmp(x.first, y.first) < 0; });
            }
            std::optional<Rational> best_span;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    Rational span = tmax[i].first - tmin[j].first;
                    if (!best_span || cmp(span, *best_span) > 0) { best_span = span; bi = i; bj = j; }
                }
            if (!best_span) continue;
            for (std::size_t e = 0; e < n; ++e) {
                if (e == bi) { sel.picks[e] = tmax[e].second; continue; }
                if (e == bj) { sel.picks[e] = tmin[e].second; continue; }
                bool placed = false;
                for (const auto& [t, c] : options[e])
                    if (cmp(t, tmin[bj].first) >= 0 && cmp(t, tmax[bi].first) <= 0) {
                        sel.picks[e] = c;
                        placed = true;
                        break;
                    }
                if (!placed) { placed = true; sel.picks[e] = options[e][0].second; }
            }
        }
        tracker.offer(inst, check_solution(inst, sel, solver_tag), opt.precision_bits);
    }
    return tracker.best;
}

}  // namespace spp
