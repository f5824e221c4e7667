#pragma once

// Guessing and verifying polynomials P(z, y) with P(z, F(z)) = 0.
// A candidate verified through order N certifies consistency to that order;
// it says nothing about minimality.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "truncated_series.hpp"

namespace latpath {

struct AnnihilatorCandidate {
    std::size_t dz = 0;
    std::size_t dy = 0;
    /// coeffs[i][j] multiplies z^i y^j.
    std::vector<std::vector<Integer>> coeffs;
    std::size_t verified_order = 0;
};

struct VerifyResult {
    bool ok = true;
    /// First order at which P(z, F) has a nonzero coefficient.
    std::optional<std::size_t> first_failure;
    explicit operator bool() const noexcept { return ok; }
};

/// Number of residual orders the guesser matches for a bidegree.
inline std::size_t guess_order(std::size_t dz, std::size_t dy) { return (dz + 1) * (dy + 1) + 10; }

namespace detail {

inline constexpr std::uint64_t kGuessPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kGuessPrime);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1u) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1u;
    }
    return r;
}

inline std::optional<std::uint64_t> reduce_mod(const Rational& q) {
    const Integer p = Integer(static_cast<unsigned long>(kGuessPrime));
    Integer num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) return std::nullopt;
    return mulmod(num.get_ui(), powmod(den.get_ui(), kGuessPrime - 2));
}

inline std::optional<std::size_t> rank_mod_p(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& row : rows) {
        std::vector<std::uint64_t> r(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            auto v = reduce_mod(row[c]);
            if (!v) return std::nullopt;
            r[c] = *v;
        }
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        const std::uint64_t inv = powmod(m[rank][c], kGuessPrime - 2);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t f = mulmod(m[r][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + kGuessPrime - mulmod(f, m[rank][j])) % kGuessPrime;
        }
        ++rank;
    }
    return rank;
}

inline void remove_content(std::vector<Integer>& row) {
    Integer g;
    for (const auto& x : row) g = gcd(g, x);
    if (g > 1)
        for (auto& x : row) x /= g;
}

// Integer row echelon form with every pivot column cleared above and below
// (cross-multiplication, then division by the row content). Returns the
// pivot column of each nonzero row.
inline std::vector<std::size_t> integer_rref(std::vector<std::vector<Integer>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Integer a = m[rank][c], b = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = a * m[r][j] - b * m[rank][j];
            remove_content(m[r]);
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

inline void normalize_candidate(std::vector<std::vector<Integer>>& g) {
    Integer content;
    for (const auto& row : g)
        for (const auto& x : row) content = gcd(content, x);
    if (content == 0) return;
    // Leading term: highest power of y, then highest power of z.
    const std::size_t dz = g.size() - 1, dy = g[0].size() - 1;
    int sign = 1;
    for (std::size_t j = dy + 1; j-- > 0 && sign == 1;) {
        bool found = false;
        for (std::size_t i = dz + 1; i-- > 0;)
            if (g[i][j] != 0) {
                sign = g[i][j] < 0 ? -1 : 1;
                found = true;
                break;
            }
        if (found) break;
    }
    for (auto& row : g)
        for (auto& x : row) x = sign * x / content;
}

}  // namespace detail

/// Residual P(z, F) through z^order.
inline TruncatedSeries<Rational> annihilator_residual(const AnnihilatorCandidate& p, const TruncatedSeries<Rational>& f, std::size_t order) {
    if (f.order() < order) throw Error(Errc::InsufficientOrder, "series shorter than the requested order");
    using S = TruncatedSeries<Rational>;
    const S ft = f.truncated(order);
    S power = S::one(order), total = S::zero(order);
    for (std::size_t j = 0; j <= p.dy; ++j) {
        std::vector<Rational> a(order + 1);
        for (std::size_t i = 0; i <= p.dz && i <= order; ++i) a[i] = p.coeffs[i][j];
        total = total + S(std::move(a)) * power;
        if (j < p.dy) power = power * ft;
    }
    return total;
}

inline VerifyResult verify_annihilator(const AnnihilatorCandidate& p, const TruncatedSeries<Rational>& f, std::size_t order) {
    auto res = annihilator_residual(p, f, order);
    const std::size_t v = res.valuation();
    if (v <= order) return {false, v};
    return {};
}

/// Searches for P of bidegree (dz, dy) with P(z, F) = 0 through order
/// guess_order(dz, dy). Returns nothing when no such P exists.
inline std::optional<AnnihilatorCandidate> guess_annihilator(const TruncatedSeries<Rational>& f, std::size_t dz, std::size_t dy) {
    const std::size_t unknowns = (dz + 1) * (dy + 1), order = guess_order(dz, dy);
    if (f.order() < order) throw Error(Errc::InsufficientOrder, "guessing needs the series through z^" + std::to_string(order),
                                       static_cast<std::int64_t>(order));
    using S = TruncatedSeries<Rational>;
    const S ft = f.truncated(order);
    std::vector<S> powers{S::one(order)};
    for (std::size_t j = 1; j <= dy; ++j) powers.push_back(powers.back() * ft);
    // Unknown (i, j) sits in column j (dz + 1) + i.
    std::vector<std::vector<Rational>> rows(order + 1, std::vector<Rational>(unknowns));
    for (std::size_t e = 0; e <= order; ++e)
        for (std::size_t j = 0; j <= dy; ++j)
            for (std::size_t i = 0; i <= dz && i <= e; ++i) rows[e][j * (dz + 1) + i] = powers[j][e - i];
    if (auto r = detail::rank_mod_p(rows, unknowns); r && *r == unknowns) return std::nullopt;

    std::vector<std::vector<Integer>> m;
    for (const auto& row : rows) {
        Integer l = 1;
        for (const auto& x : row) l = lcm(l, Integer(x.get_den()));
        std::vector<Integer> ir;
        for (const auto& x : row) ir.push_back(x.get_num() * (l / x.get_den()));
        detail::remove_content(ir);
        m.push_back(std::move(ir));
    }
    auto pivots = detail::integer_rref(m, unknowns);
    if (pivots.size() == unknowns) return std::nullopt;
    std::size_t free = 0;
    for (std::size_t idx = 0; free < unknowns; ++free) {
        if (idx < pivots.size() && pivots[idx] == free) {
            ++idx;
            continue;
        }
        break;
    }
    // x_free = L, x_{pivot_r} = -m[r][free] L / m[r][pivot_r], other free variables 0.
    Integer big_l = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) big_l = lcm(big_l, m[r][pivots[r]]);
    std::vector<Integer> x(unknowns);
    x[free] = big_l;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free] * (big_l / m[r][pivots[r]]);
    AnnihilatorCandidate cand{dz, dy, std::vector<std::vector<Integer>>(dz + 1, std::vector<Integer>(dy + 1)), 0};
    for (std::size_t j = 0; j <= dy; ++j)
        for (std::size_t i = 0; i <= dz; ++i) cand.coeffs[i][j] = x[j * (dz + 1) + i];
    detail::normalize_candidate(cand.coeffs);
    if (!verify_annihilator(cand, f, order)) throw Error(Errc::ResidualNonzero, "internal: nullspace vector fails the residual");
    cand.verified_order = order;
    return cand;
}

/// Iterative deepening: y-degree outer (from 1), z-degree inner (from 0).
/// Each candidate found is re-verified through twice its guessing order;
/// F must be known that far for the largest bidegree tried.
inline std::optional<AnnihilatorCandidate> find_annihilator(const TruncatedSeries<Rational>& f, std::size_t max_dz, std::size_t max_dy) {
    for (std::size_t dy = 1; dy <= max_dy; ++dy)
        for (std::size_t dz = 0; dz <= max_dz; ++dz) {
            const std::size_t check = 2 * guess_order(dz, dy);
            if (f.order() < check)
                throw Error(Errc::InsufficientOrder, "verification needs the series through z^" + std::to_string(check),
                            static_cast<std::int64_t>(check));
            auto cand = guess_annihilator(f, dz, dy);
            if (!cand) continue;
            auto v = verify_annihilator(*cand, f, check);
            if (!v) continue;
            cand->verified_order = check;
            return cand;
        }
    return std::nullopt;
}

}  // namespace latpath
