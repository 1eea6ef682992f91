#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "spp/instance.hpp"

namespace spp {

namespace detail {

struct TokenLine {
    std::vector<std::string> tokens;
    int line_no = 0;
};

inline std::vector<TokenLine> tokenize_lines(const std::string& text) {
    std::vector<TokenLine> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        TokenLine tl;
        tl.line_no = no;
        std::string tok;
        while (ls >> tok) tl.tokens.push_back(tok);
        if (!tl.tokens.empty()) out.push_back(std::move(tl));
    }
    return out;
}

[[noreturn]] inline void fail_at(int line, const std::string& what) {
    throw io_error("line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_count(const TokenLine& tl, std::size_t idx) {
    try {
        long v = std::stol(tl.tokens.at(idx));
        if (v < 0) fail_at(tl.line_no, "negative count");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        fail_at(tl.line_no, "expected a count");
    }
}

}  // namespace detail

// Instance file grammar:
//   spp 1
//   variant <min|max>-<perimeter|area>
//   segments N            followed by N lines "x1 y1 x2 y2"
//   islands N             followed by N lines "k x1 y1 ... xk yk"
// Tokens are integers or "p/q"; '#' starts a comment.
inline Instance parse_instance(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    std::size_t li = 0;
    auto next = [&]() -> const detail::TokenLine& {
        if (li >= lines.size()) throw io_error("unexpected end of file");
        return lines[li++];
    };

    const auto& header = next();
    if (header.tokens.size() != 2 || header.tokens[0] != "spp" || header.tokens[1] != "1")
        detail::fail_at(header.line_no, "expected header 'spp 1'");

    const auto& var_line = next();
    if (var_line.tokens.size() != 2 || var_line.tokens[0] != "variant")
        detail::fail_at(var_line.line_no, "expected 'variant <name>'");
    Instance inst;
    inst.variant = variant_from_name(var_line.tokens[1]);

    const auto& kind_line = next();
    if (kind_line.tokens.size() != 2) detail::fail_at(kind_line.line_no, "expected 'segments N' or 'islands N'");
    std::size_t n = detail::parse_count(kind_line, 1);
    if (kind_line.tokens[0] == "segments") {
        inst.kind = InstanceKind::Segments;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& tl = next();
            if (tl.tokens.size() != 4) detail::fail_at(tl.line_no, "expected 4 coordinates");
            inst.segments.emplace_back(
                Point(rational_from_string(tl.tokens[0]), rational_from_string(tl.tokens[1])),
                Point(rational_from_string(tl.tokens[2]), rational_from_string(tl.tokens[3])));
        }
    } else if (kind_line.tokens[0] == "islands") {
        inst.kind = InstanceKind::Islands;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& tl = next();
            if (tl.tokens.empty()) detail::fail_at(tl.line_no, "expected island line");
            std::size_t k = detail::parse_count(tl, 0);
            if (k == 0) detail::fail_at(tl.line_no, "empty island");
            if (tl.tokens.size() != 1 + 2 * k) detail::fail_at(tl.line_no, "expected " + std::to_string(2 * k) + " coordinates");
            std::vector<Point> isl;
            for (std::size_t j = 0; j < k; ++j)
                isl.emplace_back(rational_from_string(tl.tokens[1 + 2 * j]),
                                 rational_from_string(tl.tokens[2 + 2 * j]));
            inst.islands.push_back(std::move(isl));
        }
    } else {
        detail::fail_at(kind_line.line_no, "expected 'segments' or 'islands'");
    }
    if (li != lines.size()) detail::fail_at(lines[li].line_no, "trailing content");
    inst.check_well_formed();
    return inst;
}

inline std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << "spp 1\n";
    out << "variant " << variant_name(inst.variant) << "\n";
    if (inst.kind == InstanceKind::Segments) {
        out << "segments " << inst.segments.size() << "\n";
        for (const auto& s : inst.segments)
            out << rational_to_string(s.p.x) << ' ' << rational_to_string(s.p.y) << ' '
                << rational_to_string(s.q.x) << ' ' << rational_to_string(s.q.y) << "\n";
    } else {
        out << "islands " << inst.islands.size() << "\n";
        for (const auto& isl : inst.islands) {
            out << isl.size();
            for (const auto& p : isl) out << ' ' << rational_to_string(p.x) << ' ' << rational_to_string(p.y);
            out << "\n";
        }
    }
    return out.str();
}

// Shortest decimal for the midpoint that parses back into [lo, hi], plus an
// explicit power-of-ten bound covering the half-width.
inline std::string format_interval_decimal(const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    auto decimal_with_digits = [&](int digits) {
        mpf_class f(mid, 512);
        mp_exp_t exp;
        std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
        bool neg = !m.empty() && m[0] == '-';
        if (neg) m.erase(m.begin());
        if (m.empty()) m = "0";
        std::string s;
        if (exp <= 0) {
            s = "0." + std::string(static_cast<std::size_t>(-exp), '0') + m;
        } else if (static_cast<std::size_t>(exp) >= m.size()) {
            s = m + std::string(static_cast<std::size_t>(exp) - m.size(), '0');
        } else {
            s = m.substr(0, static_cast<std::size_t>(exp)) + "." + m.substr(static_cast<std::size_t>(exp));
        }
        return neg ? "-" + s : s;
    };
    std::string best;
    for (int digits = 1; digits <= 64; ++digits) {
        best = decimal_with_digits(digits);
        // Exact round-trip check: the printed decimal must lie within [lo, hi].
        std::string frac = best;
        auto dotp = frac.find('.');
        Rational val;
        if (dotp == std::string::npos) {
            val = rational_from_string(frac);
        } else {
            std::string digits_only = frac.substr(0, dotp) + frac.substr(dotp + 1);
            std::size_t den_pow = frac.size() - dotp - 1;
            mpz_class den(1);
            for (std::size_t i = 0; i < den_pow; ++i) den *= 10;
            val = make_rational(mpz_class(digits_only), den);
        }
        if (cmp(val, lo) >= 0 && cmp(val, hi) <= 0) break;
    }
    return best;
}

// Smallest k with 10^-k >= half-width, printed as "1e-k"; width 0 prints "0".
inline std::string format_width_bound(const Rational& lo, const Rational& hi) {
    Rational half = (hi - lo) / 2;
    if (sign(half) == 0) return "0";
    if (cmp(half, Rational(1)) > 0) return rational_to_string(Rational(mpz_class(half.get_num() / half.get_den() + 1)));
    Rational bound(1);
    int k = 0;
    while (k < 4096) {
        Rational next = bound / 10;
        if (cmp(next, half) < 0) break;
        bound = next;
        ++k;
    }
    return k == 0 ? "1" : "1e-" + std::to_string(k);
}

struct SolutionFile {
    Selection selection;
    std::vector<Point> hull;
    std::string perimeter_decimal;
    std::string perimeter_bound;
    Rational area{0};
};

inline std::string write_solution(const Solution& sol, int precision_bits = 256) {
    std::ostringstream out;
    out << "selection";
    for (auto p : sol.selection.picks) out << ' ' << p;
    out << "\n";
    out << "hull " << sol.hull.size() << "\n";
    for (const auto& v : sol.hull)
        out << rational_to_string(v.x) << ' ' << rational_to_string(v.y) << "\n";
    auto [lo, hi] = sol.perimeter.interval(precision_bits);
    out << "perimeter " << format_interval_decimal(lo, hi) << " ± " << format_width_bound(lo, hi) << "\n";
    out << "area " << rational_to_string(sol.area) << "\n";
    return out.str();
}

inline SolutionFile parse_solution(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    std::size_t li = 0;
    auto next = [&]() -> const detail::TokenLine& {
        if (li >= lines.size()) throw io_error("unexpected end of solution file");
        return lines[li++];
    };
    SolutionFile sf;
    const auto& sel_line = next();
    if (sel_line.tokens.empty() || sel_line.tokens[0] != "selection")
        detail::fail_at(sel_line.line_no, "expected 'selection ...'");
    for (std::size_t i = 1; i < sel_line.tokens.size(); ++i)
        sf.selection.picks.push_back(static_cast<std::uint32_t>(detail::parse_count(sel_line, i)));
    const auto& hull_line = next();
    if (hull_line.tokens.size() != 2 || hull_line.tokens[0] != "hull")
        detail::fail_at(hull_line.line_no, "expected 'hull M'");
    std::size_t m = detail::parse_count(hull_line, 1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& tl = next();
        if (tl.tokens.size() != 2) detail::fail_at(tl.line_no, "expected hull vertex 'x y'");
        sf.hull.emplace_back(rational_from_string(tl.tokens[0]), rational_from_string(tl.tokens[1]));
    }
    const auto& per_line = next();
    if (per_line.tokens.size() != 4 || per_line.tokens[0] != "perimeter" || per_line.tokens[2] != "±")
        detail::fail_at(per_line.line_no, "expected 'perimeter <decimal> ± <bound>'");
    sf.perimeter_decimal = per_line.tokens[1];
    sf.perimeter_bound = per_line.tokens[3];
    const auto& area_line = next();
    if (area_line.tokens.size() != 2 || area_line.tokens[0] != "area")
        detail::fail_at(area_line.line_no, "expected 'area p/q'");
    sf.area = rational_from_string(area_line.tokens[1]);
    return sf;
}

// Decimal token (possibly with '.', exponent not supported) to exact rational.
inline Rational decimal_to_rational(const std::string& tok) {
    auto epos = tok.find_first_of("eE");
    if (epos != std::string::npos) {
        Rational mant = decimal_to_rational(tok.substr(0, epos));
        long ex = std::stol(tok.substr(epos + 1));
        Rational pow(1);
        for (long i = 0; i < std::labs(ex); ++i) pow *= 10;
        return ex >= 0 ? Rational(mant * pow) : Rational(mant / pow);
    }
    auto dotp = tok.find('.');
    if (dotp == std::string::npos) return rational_from_string(tok);
    std::string digits = tok.substr(0, dotp) + tok.substr(dotp + 1);
    std::size_t den_pow = tok.size() - dotp - 1;
    mpz_class den(1);
    for (std::size_t i = 0; i < den_pow; ++i) den *= 10;
    return make_rational(mpz_class(digits), den);
}

}  // namespace spp
