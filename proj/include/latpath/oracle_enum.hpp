#pragma once

// Brute-force dynamic programs over explicit paths and sequences. These are
// deliberately slow and independent of every generating-function route; the
// rest of the library is tested against them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "boundary.hpp"
#include "sigma_poly.hpp"

namespace latpath {

enum class CountKind { Lattice, AbPath, Parking };

/// Exact counts indexed by n, together with what produced them.
template <class T>
struct CountTable {
    CountKind kind = CountKind::Lattice;
    Boundary boundary;
    std::optional<StepShape> shape;
    std::vector<T> values;
};

namespace detail {

// Sigma-weighted paths from (0,0) to (end_x, n). `limit(i)` is the bound
// the right extent at height i must stay strictly below. A diagonal step
// crossing heights v..v+b-1 is tested at each integer height it crosses.
template <class Limit>
SigmaPoly weighted_paths(Limit&& limit, StepShape shape, std::size_t n, Term end_x) {
    if (end_x < 0) return {};
    const std::size_t width = static_cast<std::size_t>(end_x) + 1;
    const Term a = shape.a, b = shape.b;
    std::vector<std::vector<SigmaPoly>> w(n + 1, std::vector<SigmaPoly>(width));
    w[0][0] = SigmaPoly(1);
    const SigmaPoly sigma = SigmaPoly::sigma();
    for (std::size_t v = 0; v <= n; ++v) {
        for (std::size_t u = 0; u < width; ++u) {
            const SigmaPoly& cur = w[v][u];
            if (cur.is_zero()) continue;
            const Term uu = static_cast<Term>(u);
            if (u + 1 < width) w[v][u + 1] += cur;
            if (v < n && uu < limit(v)) w[v + 1][u] += cur;
            if (v + static_cast<std::size_t>(b) <= n && uu + a <= end_x) {
                bool inside = true;
                for (Term i = 0; i < b && inside; ++i)
                    inside = uu * b + a * i < limit(v + static_cast<std::size_t>(i)) * b;
                if (inside) w[v + static_cast<std::size_t>(b)][u + static_cast<std::size_t>(a)] += sigma * cur;
            }
        }
    }
    return w[n][width - 1];
}

inline void require_diagonal_shape(StepShape shape) {
    if (shape.a < 0 || shape.b < 0) throw Error(Errc::UnsupportedShape, "step components must be non-negative");
    if (shape.b == 0) throw Error(Errc::UnsupportedShape, "diagonal steps need b >= 1");
}

}  // namespace detail

/// Lattice paths from (0,0) to (x-1, n) in the rectangle; equals C(x+n-1, n).
inline Integer count_rect_lattice(Term x, std::size_t n) {
    if (x < 1) throw Error(Errc::PreconditionViolated, "rectangle width must be positive");
    std::vector<Integer> row(static_cast<std::size_t>(x), Integer(1));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 1; u < row.size(); ++u) row[u] += row[u - 1];
    Integer dp = row.back();
    if (dp != binomial(x + static_cast<Term>(n) - 1, static_cast<Term>(n)))
        throw Error(Errc::OracleMismatch, "rectangle DP disagrees with the binomial count");
    return dp;
}

/// sum_d (-1)^{n-d(b-1)} C(da - x, n - d(b-1)) C(n - d(b-1), d) sigma^d.
inline SigmaPoly rect_ab_formula(StepShape shape, Term x, std::size_t n) {
    detail::require_diagonal_shape(shape);
    const Term nn = static_cast<Term>(n);
    std::vector<Integer> c(n / static_cast<std::size_t>(shape.b) + 1);
    for (Term d = 0; d * shape.b <= nn; ++d) {
        const Term m = nn - d * (shape.b - 1);
        Integer term = binomial(d * shape.a - x, m) * binomial(m, d);
        if (m % 2) term = -term;
        c[static_cast<std::size_t>(d)] = term;
    }
    return SigmaPoly(std::move(c));
}

/// sum over d of the multinomial (E + N + d)! / (E! N! d!) sigma^d with
/// E = x - 1 - da east and N = n - db north steps.
inline SigmaPoly rect_ab_multinomial(StepShape shape, Term x, std::size_t n) {
    detail::require_diagonal_shape(shape);
    const Term nn = static_cast<Term>(n);
    std::vector<Integer> c;
    for (Term d = 0; d * shape.b <= nn; ++d) {
        const Term e = x - 1 - d * shape.a, north = nn - d * shape.b;
        c.push_back(e < 0 ? Integer(0) : binomial(e + north + d, d) * binomial(e + north, north));
    }
    return SigmaPoly(std::move(c));
}

/// (a,b)-paths from (0,0) to (x-1, n) inside the rectangle, sigma marking
/// diagonal steps. Cross-checked against the multinomial sum, and against
/// rect_ab_formula when x > a floor(n/b), where every diagonal count fits.
inline SigmaPoly count_rect_ab(StepShape shape, Term x, std::size_t n) {
    detail::require_diagonal_shape(shape);
    if (x < 1) throw Error(Errc::PreconditionViolated, "rectangle width must be positive");
    SigmaPoly dp = detail::weighted_paths([x](std::size_t) { return x; }, shape, n, x - 1);
    if (!(dp == rect_ab_multinomial(shape, x, n)))
        throw Error(Errc::OracleMismatch, "rectangle DP disagrees with the multinomial count");
    if (x > shape.a * static_cast<Term>(n / static_cast<std::size_t>(shape.b)) && !(dp == rect_ab_formula(shape, x, n)))
        throw Error(Errc::OracleMismatch, "rectangle DP disagrees with the double-binomial formula");
    return dp;
}

/// LP_n: non-decreasing (x_0..x_{n-1}) with x_i < s_i.
inline Integer count_lp_dp(const Boundary& boundary, std::size_t n) {
    if (n == 0) return 1;
    const std::size_t width = static_cast<std::size_t>(boundary.term(n - 1));
    // ending[u]: sequences so far whose last entry is u (start: "last = 0").
    std::vector<Integer> ending(width);
    ending[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lim = static_cast<std::size_t>(boundary.term(i));
        std::vector<Integer> next(width);
        Integer run;
        for (std::size_t u = 0; u < lim; ++u) {
            run += ending[u];
            next[u] = run;
        }
        ending = std::move(next);
    }
    Integer total;
    for (const auto& e : ending) total += e;
    return total;
}

/// SP_n(a, b, sigma; s): weighted (a,b;s)-paths ending at (s_n - 1, n).
inline SigmaPoly count_sp_dp(const Boundary& boundary, StepShape shape, std::size_t n) {
    if (shape.a == 0 && shape.b == 0) throw Error(Errc::UnsupportedShape, "(0,0) enumerator is not a polynomial");
    detail::require_diagonal_shape(shape);
    if (auto sc = slope_condition(boundary, shape); !sc)
        throw Error(Errc::SlopeConditionViolated, "boundary violates the slope condition",
                    static_cast<std::int64_t>(*sc.counterexample));
    return detail::weighted_paths([&](std::size_t i) { return boundary.term(i); }, shape, n, boundary.term(n) - 1);
}

inline constexpr double kParkingEnumerationLimit = 1e8;

/// P_n by enumerating all of [0, s_{n-1})^n and testing the sorted sequence.
inline Integer count_parking_bf(const Boundary& boundary, std::size_t n) {
    if (n == 0) return 1;
    const Term top = boundary.term(n - 1);
    double space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(top);
    if (space > kParkingEnumerationLimit) throw Error(Errc::TooLarge, "parking enumeration space exceeds 1e8");
    const auto s = boundary.terms(n);
    std::vector<Term> x(n, 0), sorted(n);
    Integer count;
    while (true) {
        sorted = x;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = sorted[i] < s[i];
        if (ok) ++count;
        std::size_t pos = 0;
        while (pos < n && ++x[pos] == top) x[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

/// Checks |rectangle(x, n)| = sum_m |bounded_m| * |rectangle(x - s_m, n - m)|,
/// sigma-weighted when a shape is given.
inline bool decomposition_check(const Boundary& boundary, std::optional<StepShape> shape, Term x, std::size_t n) {
    if (x <= boundary.term(n)) throw Error(Errc::PreconditionViolated, "decomposition needs x > s_n");
    if (!shape) {
        Integer rhs;
        for (std::size_t m = 0; m <= n; ++m) rhs += count_lp_dp(boundary, m) * count_rect_lattice(x - boundary.term(m), n - m);
        return rhs == count_rect_lattice(x, n);
    }
    if (auto sc = slope_condition(boundary, shape); !sc)
        throw Error(Errc::SlopeConditionViolated, "boundary violates the slope condition",
                    static_cast<std::int64_t>(*sc.counterexample));
    SigmaPoly rhs;
    for (std::size_t m = 0; m <= n; ++m)
        rhs += count_sp_dp(boundary, *shape, m) * count_rect_ab(*shape, x - boundary.term(m), n - m);
    return rhs == count_rect_ab(*shape, x, n);
}

}  // namespace latpath
