#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace latpath {

using Integer = mpz_class;
using Rational = mpq_class;

/// Generalized binomial coefficient C(top, k); negative `top` is allowed,
/// negative `k` gives 0.
inline Integer binomial(const Integer& top, std::int64_t k) {
    Integer r;
    if (k < 0) return r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Integer binomial(std::int64_t top, std::int64_t k) {
    return binomial(Integer(static_cast<long>(top)), k);
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// "p/q", or plain "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer parse_integer(const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw Error(Errc::ParseError, "not an integer: '" + s + "'");
    return z;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace latpath
