#pragma once

// Triangular recursions obtained from the rectangle decomposition, and the
// Appell relations  sum_n count_n t^n phi(t)^{s_n} = Psi(t)  they encode.

#include <cstddef>
#include <optional>
#include <vector>

#include "boundary.hpp"
#include "oracle_enum.hpp"
#include "sigma_poly.hpp"
#include "truncated_series.hpp"

namespace latpath {

namespace detail {

inline void require_recursion_shape(const Boundary& boundary, StepShape shape) {
    if (shape.a == 0 && shape.b == 0) throw Error(Errc::UnsupportedShape, "(0,0) enumerator is not a polynomial");
    require_diagonal_shape(shape);
    if (auto sc = slope_condition(boundary, shape); !sc)
        throw Error(Errc::SlopeConditionViolated, "boundary violates the slope condition",
                    static_cast<std::int64_t>(*sc.counterexample));
}

}  // namespace detail

/// Coefficient of SP_m in the n-th recursion, with k = n - m and s = s_m:
/// sum_j (-1)^{k-j(b-1)} C(s + j a, k - j(b-1)) C(k - j(b-1), j) sigma^j.
inline SigmaPoly sr_coefficient(Term s, StepShape shape, std::size_t k) {
    const Term kk = static_cast<Term>(k);
    std::vector<Integer> c;
    for (Term j = 0; j * shape.b <= kk; ++j) {
        const Term m = kk - j * (shape.b - 1);
        Integer term = binomial(s + j * shape.a, m) * binomial(m, j);
        if (m % 2) term = -term;
        c.push_back(std::move(term));
    }
    return SigmaPoly(std::move(c));
}

/// Right side of the n-th recursion: sum_d (-1)^{n-d(b-1)} C(da, n-d(b-1)) C(n-d(b-1), d) sigma^d.
inline SigmaPoly sr_right_side(StepShape shape, std::size_t n) {
    const Term nn = static_cast<Term>(n);
    std::vector<Integer> c;
    for (Term d = 0; d * shape.b <= nn; ++d) {
        const Term m = nn - d * (shape.b - 1);
        Integer term = binomial(d * shape.a, m) * binomial(m, d);
        if (m % 2) term = -term;
        c.push_back(std::move(term));
    }
    return SigmaPoly(std::move(c));
}

/// Column series sum_k b_{m+k,m} t^k of the (a,b) recursion for s_m = s.
inline TruncatedSeries<SigmaPoly> sr_column_series(Term s, StepShape shape, std::size_t order) {
    std::vector<SigmaPoly> c;
    for (std::size_t k = 0; k <= order; ++k) c.push_back(sr_coefficient(s, shape, k));
    return TruncatedSeries<SigmaPoly>(std::move(c));
}

/// LP_0..LP_N from sum_{m<=n} (-1)^m LP_m C(s_m, n-m) = 0 (n >= 1), LP_0 = 1.
inline CountTable<Integer> lp_recursion(const Boundary& boundary, std::size_t max_n) {
    const auto s = boundary.terms(max_n + 1);
    std::vector<Integer> lp(max_n + 1);
    lp[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        Integer acc;
        for (std::size_t m = 0; m < n; ++m) {
            Integer t = lp[m] * binomial(s[m], static_cast<Term>(n - m));
            if (m % 2) acc -= t;
            else acc += t;
        }
        // (-1)^n LP_n = -acc
        lp[n] = n % 2 ? acc : Integer(-acc);
    }
    return {CountKind::Lattice, boundary, std::nullopt, std::move(lp)};
}

/// SP_0..SP_N as sigma-polynomials, by forward substitution in the (a,b)
/// recursions (unit diagonal).
inline CountTable<SigmaPoly> sp_recursion(const Boundary& boundary, StepShape shape, std::size_t max_n) {
    detail::require_recursion_shape(boundary, shape);
    const auto s = boundary.terms(max_n + 1);
    std::vector<SigmaPoly> sp(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        SigmaPoly acc = sr_right_side(shape, n);
        for (std::size_t m = 0; m < n; ++m) acc -= sp[m] * sr_coefficient(s[m], shape, n - m);
        sp[n] = std::move(acc);
    }
    return {CountKind::AbPath, boundary, shape, std::move(sp)};
}

/// P_0..P_N from P_N = -sum_{n<N} C(N,n) P_n (-s_n)^{N-n}.
inline CountTable<Integer> parking_recursion(const Boundary& boundary, std::size_t max_n) {
    const auto s = boundary.terms(max_n + 1);
    std::vector<Integer> p(max_n + 1);
    p[0] = 1;
    for (std::size_t big = 1; big <= max_n; ++big) {
        Integer acc;
        for (std::size_t n = 0; n < big; ++n)
            acc += binomial(static_cast<Term>(big), static_cast<Term>(n)) * p[n] *
                   ipow(Integer(static_cast<long>(-s[n])), big - n);
        p[big] = -acc;
    }
    return {CountKind::Parking, boundary, std::nullopt, std::move(p)};
}

/// Gould's series: the power-series root of f - 1 = z f^a, with
/// coefficients C(am+1, m) / (am+1).
inline TruncatedSeries<Rational> gould_f(Term a, std::size_t order) {
    std::vector<Rational> c;
    for (std::size_t m = 0; m <= order; ++m) {
        const Term top = a * static_cast<Term>(m) + 1;
        Rational q(binomial(top, static_cast<Term>(m)), Integer(static_cast<long>(top)));
        q.canonicalize();
        c.push_back(std::move(q));
    }
    return TruncatedSeries<Rational>(std::move(c));
}

/// F(t) = f(-(1-t)^{a-1} t^b sigma) with f = gould_f(a).
inline TruncatedSeries<SigmaPoly> capital_F(StepShape shape, std::size_t order) {
    detail::require_diagonal_shape(shape);
    auto f = gould_f(shape.a, order).map([](const Rational& q) {
        if (!is_integral(q)) throw Error(Errc::InexactDivision, "Gould coefficient is not an integer");
        return SigmaPoly(q.get_num());
    });
    using S = TruncatedSeries<SigmaPoly>;
    S one_minus_t = S::one(order) - S::monomial(SigmaPoly(1), 1, order);
    S inner = series_pow(one_minus_t, static_cast<long>(shape.a - 1)) *
              S::monomial(-SigmaPoly::sigma(), static_cast<std::size_t>(shape.b), order);
    return series_compose(f, inner);
}

/// phi and Psi of an Appell relation, plus the prefix-reduced right side
///   Psi' = (Psi - sum_{i<r} c_i t^i phi^{a_i}) / (t^r phi^{a_{r-1}})
/// used when the periodic tail is converted on its own.
template <Coefficient R>
struct AppellData {
    TruncatedSeries<R> phi;
    TruncatedSeries<R> psi;
    Boundary boundary;
    std::optional<StepShape> shape;
    std::vector<R> prefix_counts;
    TruncatedSeries<R> reduced_psi;
};

/// Lattice mode (no shape): phi = 1 - t, Psi = 1. Shape mode:
/// phi = (1 - t) F(t), Psi = 1. All series are truncated at `order`.
inline AppellData<SigmaPoly> appell_data(const Boundary& boundary, std::optional<StepShape> shape, std::size_t order) {
    using S = TruncatedSeries<SigmaPoly>;
    const std::size_t r = boundary.prefix_length();
    const std::size_t wide = order + r;
    S one_minus_t = S::one(wide) - S::monomial(SigmaPoly(1), 1, wide);
    S phi = one_minus_t;
    std::vector<SigmaPoly> prefix;
    if (shape) {
        detail::require_recursion_shape(boundary, *shape);
        phi = one_minus_t * capital_F(*shape, wide);
        if (r) prefix = sp_recursion(boundary, *shape, r - 1).values;
    } else if (r) {
        for (auto& v : lp_recursion(boundary, r - 1).values) prefix.emplace_back(std::move(v));
    }
    S psi = S::one(wide);
    S numerator = psi;
    for (std::size_t i = 0; i < r; ++i)
        numerator = numerator - prefix[i] * S::monomial(SigmaPoly(1), i, wide) * series_pow(phi, static_cast<long>(boundary.prefix()[i]));
    S reduced = series_shift_down(numerator, r) * series_pow(phi.truncated(order), -static_cast<long>(boundary.offset()));
    return {phi.truncated(order), psi.truncated(order), boundary, shape, std::move(prefix), std::move(reduced)};
}

/// Specializes sigma to a rational value.
inline AppellData<Rational> specialize(const AppellData<SigmaPoly>& data, const Rational& sigma) {
    auto ev = [&](const SigmaPoly& p) { return p.evaluate(sigma); };
    std::vector<Rational> prefix;
    for (const auto& c : data.prefix_counts) prefix.push_back(ev(c));
    return {data.phi.map(ev), data.psi.map(ev), data.boundary, data.shape, std::move(prefix), data.reduced_psi.map(ev)};
}

/// Checks sum_{n<=N} counts[n] t^n phi^{s_n} = Psi through t^N, where
/// N = counts.size() - 1. Returns N; throws ResidualNonzero at the first
/// order where the two sides differ.
template <Coefficient R>
std::size_t appell_residual(const AppellData<R>& data, const std::vector<R>& counts) {
    if (counts.empty()) throw Error(Errc::PreconditionViolated, "no counts to check");
    const std::size_t n_max = counts.size() - 1;
    if (data.phi.order() < n_max) throw Error(Errc::InsufficientOrder, "phi is truncated below the requested order");
    using S = TruncatedSeries<R>;
    const S phi = data.phi.truncated(n_max);
    S power = S::one(n_max);
    Term current = 0;
    S total = S::zero(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Term s = data.boundary.term(n);
        if (s > current) {
            power = power * series_pow(phi, static_cast<long>(s - current));
            current = s;
        }
        total = total + counts[n] * series_shift_up(power, n).truncated(n_max);
    }
    const S rhs = data.psi.truncated(n_max);
    for (std::size_t i = 0; i <= n_max; ++i)
        if (!(total[i] == rhs[i]))
            throw Error(Errc::ResidualNonzero, "Appell identity fails at order " + std::to_string(i), static_cast<std::int64_t>(i));
    return n_max;
}

/// Recomputes the counts by recursion and checks the Appell identity.
inline std::size_t appell_residual(const Boundary& boundary, std::optional<StepShape> shape, std::size_t max_n) {
    auto data = appell_data(boundary, shape, max_n);
    std::vector<SigmaPoly> counts;
    if (shape) counts = sp_recursion(boundary, *shape, max_n).values;
    else
        for (auto& v : lp_recursion(boundary, max_n).values) counts.emplace_back(std::move(v));
    return appell_residual(data, counts);
}

/// SP_n(1,1,-1; s) = 0 for 1 <= n <= N: even and odd diagonal counts balance.
inline bool parity_check(const Boundary& boundary, std::size_t max_n) {
    auto sp = sp_recursion(boundary, StepShape{1, 1}, max_n).values;
    if (sp[0].evaluate(Rational(-1)) != 1) return false;
    for (std::size_t n = 1; n <= max_n; ++n)
        if (sgn(sp[n].evaluate(Rational(-1))) != 0) return false;
    return true;
}

}  // namespace latpath
