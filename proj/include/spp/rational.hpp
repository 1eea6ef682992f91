#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spp {

// Exact rational coordinate type. mpq_class keeps values in reduced form with
// a positive denominator as long as construction goes through the helpers
// below (raw mpq_class(num, den) does not canonicalize on its own).
using Rational = mpq_class;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw io_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw io_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

// Accepts an optionally signed integer or "p/q". Anything else is a syntax error.
inline Rational rational_from_string(std::string_view tok) {
    if (tok.empty()) throw io_error("empty rational token");
    std::string s(tok);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n);
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw io_error("rational token with zero denominator: " + s);
        if (d < 0) { n = -n; d = -d; }
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw io_error("invalid rational token: " + s);
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rational_to_double(const Rational& r) { return r.get_d(); }

inline std::size_t hash_mpz(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(p->_mp_size);
    const std::size_t n = static_cast<std::size_t>(p->_mp_size < 0 ? -p->_mp_size : p->_mp_size);
    for (std::size_t i = 0; i < n; ++i)
        h = h * 1099511628211ull ^ static_cast<std::size_t>(p->_mp_d[i]);
    return h;
}

inline std::size_t hash_rational(const Rational& r) {
    return hash_mpz(r.get_num()) * 31 + hash_mpz(r.get_den());
}

}  // namespace spp
