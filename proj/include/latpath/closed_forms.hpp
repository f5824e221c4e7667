#pragma once

// Explicit formulas for arithmetic-progression boundaries s_i = c + i d.

#include <cstddef>
#include <vector>

#include "integer.hpp"
#include "sigma_poly.hpp"
#include "truncated_series.hpp"

namespace latpath {

/// LP_n(c + i d) = c / (c + n(d+1)) * C(c + n(d+1), n).
inline Integer lp_arith_closed(Term c, Term d, std::size_t n) {
    if (c < 1 || d < 0) throw Error(Errc::InvalidBoundary, "arithmetic boundary needs c >= 1, d >= 0");
    const Term top = c + static_cast<Term>(n) * (d + 1);
    Integer num = Integer(static_cast<long>(c)) * binomial(top, static_cast<Term>(n));
    Integer den(static_cast<long>(top));
    if (num % den != 0) throw Error(Errc::InexactDivision, "closed form is not an integer");
    return num / den;
}

/// (t/z)^c where t is the root of t^2 - (1 - sigma z) t + z = 0 with t(0) = 0,
/// i.e. t = (1 - sigma z - sqrt((1 - sigma z)^2 - 4z)) / 2.
inline TruncatedSeries<SigmaPoly> sp11_closed_series(Term c, std::size_t order) {
    if (c < 1) throw Error(Errc::InvalidBoundary, "arithmetic boundary needs c >= 1");
    using S = TruncatedSeries<SigmaPoly>;
    const std::size_t n = order + 1;
    S one_minus_sz = S::one(n) - S::monomial(SigmaPoly::sigma(), 1, n);
    S disc = one_minus_sz * one_minus_sz - S::monomial(SigmaPoly(4), 1, n);
    S two_t = one_minus_sz - series_sqrt(disc);
    S t = two_t.map([](const SigmaPoly& p) { return p.div_exact(Integer(2)); });
    return series_pow(series_shift_down(t, 1), static_cast<long>(c));
}

/// T_{n,m} = sum_{j <= m/b} C(c+nd-1, j) C(c+nd+m-bj, m-bj) sigma^j; zero for m < 0.
inline SigmaPoly t_polynomial(Term b, Term c, Term d, Term n, Term m) {
    if (b < 1) throw Error(Errc::UnsupportedShape, "diagonal steps need b >= 1");
    if (m < 0) return {};
    const Term base = c + n * d;
    std::vector<Integer> coeffs;
    for (Term j = 0; j * b <= m; ++j) coeffs.push_back(binomial(base - 1, j) * binomial(base + m - b * j, m - b * j));
    return SigmaPoly(std::move(coeffs));
}

namespace detail {

inline SigmaPoly div_by_n(const SigmaPoly& p, Term c, Term n) {
    return (Integer(static_cast<long>(c)) * p).div_exact(Integer(static_cast<long>(n)));
}

}  // namespace detail

/// SP_n(1, b, sigma; c + i d) for n >= 1, from Lagrange inversion:
/// (c/n) [T_{n,n-1} + b sigma T_{n,n-b} + (1-b) sigma T_{n,n-b-1}].
inline SigmaPoly sp1b_closed(Term b, Term c, Term d, std::size_t n) {
    if (n == 0) return SigmaPoly(1);
    const Term nn = static_cast<Term>(n);
    const SigmaPoly s = SigmaPoly::sigma();
    SigmaPoly sum = t_polynomial(b, c, d, nn, nn - 1) +
                    Integer(static_cast<long>(b)) * (s * t_polynomial(b, c, d, nn, nn - b)) +
                    Integer(static_cast<long>(1 - b)) * (s * t_polynomial(b, c, d, nn, nn - b - 1));
    return detail::div_by_n(sum, c, nn);
}

/// b = 1: c (1 + sigma) / n * sum_{j<n} C(c+nd-1, j) C(c + n(d+1) - j - 1, n-1-j) sigma^j.
inline SigmaPoly sp11_closed(Term c, Term d, std::size_t n) {
    if (n == 0) return SigmaPoly(1);
    const Term nn = static_cast<Term>(n);
    std::vector<Integer> coeffs;
    for (Term j = 0; j < nn; ++j)
        coeffs.push_back(binomial(c + nn * d - 1, j) * binomial(c + nn * (d + 1) - j - 1, nn - 1 - j));
    return detail::div_by_n((SigmaPoly(1) + SigmaPoly::sigma()) * SigmaPoly(std::move(coeffs)), c, nn);
}

}  // namespace latpath
