#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <mpfr.h>

#include "spp/rational.hpp"

namespace spp {

// A sum of square roots of nonnegative rationals (Euclidean edge lengths),
// kept symbolically as a multiset of squared terms so that the certified
// enclosing interval can be re-evaluated at any precision. Exact rational
// summands (degenerate edges of length 0 have term 0) cost nothing.
class RadicalSum {
public:
    RadicalSum() = default;

    static RadicalSum zero() { return RadicalSum(); }

    static RadicalSum sqrt_of(const Rational& sq) {
        RadicalSum r;
        r.add_sqrt(sq);
        return r;
    }

    void add_sqrt(const Rational& sq, long mult = 1) {
        assert(sign(sq) >= 0);
        if (sign(sq) == 0 || mult == 0) return;
        auto [it, inserted] = terms_.try_emplace(sq, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
        dirty_ = true;
    }

    void add(const RadicalSum& o) {
        for (const auto& [sq, m] : o.terms_) add_sqrt(sq, m);
    }

    void subtract_sqrt(const Rational& sq) { add_sqrt(sq, -1); }

    void subtract(const RadicalSum& o) {
        for (const auto& [sq, m] : o.terms_) add_sqrt(sq, -m);
    }

    bool empty() const { return terms_.empty(); }

    // All multiplicities must be nonnegative for the value to be a real
    // perimeter; mixed signs only appear transiently during combination.
    bool nonnegative_terms() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
    }

    bool same_terms(const RadicalSum& o) const { return terms_ == o.terms_; }

    int precision_bits() const { return bits_; }

    const Rational& lower(int bits) const { ensure(bits); return lo_; }
    const Rational& upper(int bits) const { ensure(bits); return hi_; }

    // Certified interval at the given precision as exact rationals.
    std::pair<Rational, Rational> interval(int bits) const {
        ensure(bits);
        return {lo_, hi_};
    }

    double approx() const {
        double v = 0.0;
        for (const auto& [sq, m] : terms_) v += static_cast<double>(m) * std::sqrt(sq.get_d());
        return v;
    }

    enum class Order { Less, Tie, Greater };

    // Escalates both intervals up to max_bits; Tie means the intervals still
    // overlap there (treated as equality downstream, by documented policy).
    static Order compare(const RadicalSum& u, const RadicalSum& v, int max_bits) {
        if (u.same_terms(v)) return Order::Tie;
        for (int bits = 64;; bits *= 2) {
            if (bits > max_bits) bits = max_bits;
            auto [ul, uh] = u.interval(bits);
            auto [vl, vh] = v.interval(bits);
            if (cmp(uh, vl) < 0) return Order::Less;
            if (cmp(vh, ul) < 0) return Order::Greater;
            if (bits >= max_bits) return Order::Tie;
        }
    }

    std::string debug_string() const {
        std::string s;
        for (const auto& [sq, m] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(m) + "*sqrt(" + rational_to_string(sq) + ")";
        }
        return s.empty() ? "0" : s;
    }

private:
    void ensure(int bits) const {
        if (!dirty_ && bits_ >= bits) return;
        evaluate(std::max(bits, bits_ > 0 ? bits_ : bits));
    }

    void evaluate(int bits) const {
        mpfr_t lo, hi, term_lo, term_hi;
        mpfr_init2(lo, bits);
        mpfr_init2(hi, bits);
        mpfr_init2(term_lo, bits);
        mpfr_init2(term_hi, bits);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
        for (const auto& [sq, m] : terms_) {
            mpfr_set_q(term_lo, sq.get_mpq_t(), MPFR_RNDD);
            mpfr_sqrt(term_lo, term_lo, MPFR_RNDD);
            mpfr_set_q(term_hi, sq.get_mpq_t(), MPFR_RNDU);
            mpfr_sqrt(term_hi, term_hi, MPFR_RNDU);
            if (m >= 0) {
                mpfr_mul_si(term_lo, term_lo, m, MPFR_RNDD);
                mpfr_mul_si(term_hi, term_hi, m, MPFR_RNDU);
            } else {
                // Negative multiplicity swaps the roles of the bounds.
                mpfr_mul_si(term_lo, term_lo, m, MPFR_RNDU);
                mpfr_mul_si(term_hi, term_hi, m, MPFR_RNDD);
                mpfr_swap(term_lo, term_hi);
            }
            mpfr_add(lo, lo, term_lo, MPFR_RNDD);
            mpfr_add(hi, hi, term_hi, MPFR_RNDU);
        }
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, lo);
        lo_ = Rational(q);
        mpfr_get_q(q, hi);
        hi_ = Rational(q);
        mpq_clear(q);
        mpfr_clear(lo);
        mpfr_clear(hi);
        mpfr_clear(term_lo);
        mpfr_clear(term_hi);
        bits_ = bits;
        dirty_ = false;
    }

    std::map<Rational, long> terms_;
    mutable Rational lo_{0};
    mutable Rational hi_{0};
    mutable int bits_ = 0;
    mutable bool dirty_ = false;
};

}  // namespace spp
