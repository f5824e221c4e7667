#pragma once

// From an Appell relation to ordinary generating functions: the branches of
// z = t^k phi(t)^l, the k x k section system, and its assembly.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "appell.hpp"
#include "cyclotomic.hpp"
#include "ramified_series.hpp"

namespace latpath {

/// The k fractional power series solutions of z = t^k h(t) with zero
/// constant term; branches[m] is tau0 twisted by xi^m.
struct PuiseuxBranchSet {
    unsigned k = 1;
    RamifiedSeries<Rational> tau0;
    std::vector<RamifiedSeries<CycloNum>> branches;
    /// Exponent of u through which every branch residual was checked to vanish.
    long verified_order = 0;
};

/// tau0 = u + c_2 u^2 + ... with u = z^{1/k} and tau0^k h(tau0) = z.
/// Taking k-th roots, tau0 = u G(tau0) with G = h^{-1/k}, so c_n is the
/// coefficient of u^{n-1} in G(tau0), which involves only c_1..c_{n-1}.
/// The result is known through u^{min(order, order(h) + 1)}.
inline RamifiedSeries<Rational> solve_branch_zero(const TruncatedSeries<Rational>& h, unsigned k, long order) {
    if (k == 0) throw Error(Errc::PreconditionViolated, "ramification must be positive");
    if (h[0] != 1) throw Error(Errc::BadConstantTerm, "h(0) must be 1");
    if (order < 1) throw Error(Errc::PreconditionViolated, "branch order must be positive");
    const std::size_t n = static_cast<std::size_t>(std::min<long>(order, static_cast<long>(h.order()) + 1));
    const auto g = series_pow(h.truncated(n - 1), Rational(-1, static_cast<long>(k)));
    // pw[i][m] = [u^m] tau^i, filled one column m at a time.
    std::vector<std::vector<Rational>> pw(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> c(n + 1);
    pw[0][0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational cm;
        for (std::size_t i = 0; i < m; ++i)
            if (sgn(g[i]) != 0) cm += g[i] * pw[i][m - 1];
        c[m] = cm;
        pw[1][m] = cm;
        for (std::size_t i = 2; i <= m; ++i) {
            Rational acc;
            for (std::size_t j = 1; j + i - 1 <= m; ++j)
                if (sgn(c[j]) != 0) acc += c[j] * pw[i - 1][m - j];
            pw[i][m] = acc;
        }
    }
    return RamifiedSeries<Rational>(k, 0, std::move(c));
}

/// tau^k h(tau) - u^k, over whatever coefficient ring tau carries.
template <Coefficient R>
RamifiedSeries<R> branch_residual(const TruncatedSeries<Rational>& h, const RamifiedSeries<R>& tau) {
    const unsigned k = tau.ramification();
    auto hr = h.map([](const Rational& q) { return R(q); });
    RamifiedSeries<R> lhs = tau.pow(k) * compose(hr, tau);
    return lhs - RamifiedSeries<R>::monomial(k, R(1), static_cast<long>(k), lhs.order());
}

namespace detail {

template <Coefficient R>
void require_zero_residual(const RamifiedSeries<R>& res, long m) {
    const long v = res.valuation();
    if (v <= res.order())
        throw Error(Errc::BranchResidualNonzero,
                    "branch " + std::to_string(m) + " fails z = tau^k h(tau) at u^" + std::to_string(v), v);
}

}  // namespace detail

/// Twists tau0 into all k branches and re-verifies each against z = tau^k h(tau).
inline PuiseuxBranchSet all_branches(const RamifiedSeries<Rational>& tau0, unsigned k, const TruncatedSeries<Rational>& h) {
    if (tau0.ramification() != k) throw Error(Errc::PreconditionViolated, "ramification mismatch");
    PuiseuxBranchSet set{k, tau0, {}, 0};
    auto res0 = branch_residual(h, tau0);
    detail::require_zero_residual(res0, 0);
    set.verified_order = res0.order();
    for (unsigned m = 0; m < k; ++m) {
        auto tau = ramified_twist(tau0, m, k);
        if (m > 0) {
            auto res = branch_residual(h, tau);
            detail::require_zero_residual(res, m);
            set.verified_order = std::min(set.verified_order, res.order());
        }
        set.branches.push_back(std::move(tau));
    }
    return set;
}

/// Exact determinant over a field by Gaussian elimination.
template <class F>
F exact_determinant(std::vector<std::vector<F>> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m[p][c])) ++p;
        if (p == n) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const F inv = coeff_traits<F>::unit_inverse(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) continue;
            const F f = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
        }
    }
    return det;
}

/// det[xi^{ij}]_{0 <= i,j < k} over Q(xi_k).
inline CycloNum vandermonde_roots_det(unsigned k) {
    std::vector<std::vector<CycloNum>> m(k, std::vector<CycloNum>(k));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) m[i][j] = CycloNum::root_of_unity(k, static_cast<long>(i * j));
    return exact_determinant(std::move(m));
}

struct SectionDiagnostics {
    unsigned k = 1;
    /// u-valuation of the system determinant; k(k-1)/2 expected.
    long det_valuation = 0;
    CycloNum det_leading;
    bool vandermonde_leading = false;
    long budget = 0;
    long verified_branch_order = 0;
};

/// Q_j(z) = sum_q count_{r+qk+j} z^q for j = 0..k-1.
struct SectionGF {
    std::vector<TruncatedSeries<Rational>> sections;
    Boundary boundary;
    std::optional<StepShape> shape;
    std::size_t prefix_length = 0;
    std::vector<Rational> prefix_counts;
    SectionDiagnostics diagnostics;
};

/// Solves sum_j tau^j phi(tau)^{b_j} Q_j(tau^k phi(tau)^l) = Psi'(tau) at the
/// k branches tau. Every input series is used through t^{order(phi)}; the
/// sections are returned through z^{q_max}. Throws InsufficientOrder when the
/// input truncation cannot certify that many terms.
inline SectionGF section_gfs(const AppellData<Rational>& data, std::size_t q_max) {
    const Boundary& bd = data.boundary;
    const unsigned k = static_cast<unsigned>(bd.height());
    if (k > detail::kCachedModuli) throw Error(Errc::TooLarge, "period height too large");
    const long budget = static_cast<long>(std::min(data.phi.order(), data.reduced_psi.order()));
    if (budget < 1) throw Error(Errc::InsufficientOrder, "input series too short");
    using S = TruncatedSeries<Rational>;
    const std::size_t u = static_cast<std::size_t>(budget);
    const S phi = data.phi.truncated(u);
    const S h = series_pow(phi, static_cast<long>(bd.width()));

    auto tau0 = solve_branch_zero(h, k, budget);
    auto set = all_branches(tau0, k, h);

    SeriesMatrix<CycloNum> m(k, std::vector<RamifiedSeries<CycloNum>>(k, RamifiedSeries<CycloNum>(k, 0, {})));
    std::vector<RamifiedSeries<CycloNum>> rhs;
    for (unsigned j = 0; j < k; ++j) {
        S entry = series_pow(phi, static_cast<long>(bd.period()[j]));
        entry = series_shift_up(entry, j).truncated(u);
        auto e0 = compose(entry, tau0);
        for (unsigned br = 0; br < k; ++br) m[br][j] = ramified_twist(e0, br, k);
    }
    auto psi0 = compose(data.reduced_psi.truncated(u), tau0);
    for (unsigned br = 0; br < k; ++br) rhs.push_back(ramified_twist(psi0, br, k));

    auto sol = linear_solve_series(std::move(m), std::move(rhs));

    SectionDiagnostics diag;
    diag.k = k;
    diag.det_valuation = sol.determinant.valuation();
    diag.det_leading = sol.determinant.valuation() <= sol.determinant.order() ? sol.determinant.coefficient(diag.det_valuation)
                                                                              : CycloNum(k, {});
    diag.vandermonde_leading = diag.det_leading == vandermonde_roots_det(k);
    diag.budget = budget;
    diag.verified_branch_order = set.verified_order;
    if (diag.det_valuation != static_cast<long>(k) * (k - 1) / 2 || !diag.vandermonde_leading)
        throw Error(Errc::SingularWithinPrecision, "section determinant does not have the Vandermonde leading term");

    SectionGF out{{}, bd, data.shape, bd.prefix_length(), data.prefix_counts, diag};
    for (unsigned j = 0; j < k; ++j) {
        const auto& x = sol.x[j];
        const long known = x.order();
        if (known < static_cast<long>(q_max * k))
            throw Error(Errc::InsufficientOrder, "section " + std::to_string(j) + " is known only through u^" + std::to_string(known),
                        static_cast<std::int64_t>(j));
        std::vector<Rational> q(q_max + 1);
        for (long e = -x.pole_order(); e <= static_cast<long>(q_max * k); ++e) {
            const CycloNum c = x.coefficient(e);
            if (c.is_zero()) continue;
            if (e < 0 || e % static_cast<long>(k) != 0 || !c.is_rational())
                throw Error(Errc::NonRationalOutput, "section " + std::to_string(j) + " has a non-rational term at u^" + std::to_string(e), e);
            q[static_cast<std::size_t>(e / static_cast<long>(k))] = c.rational_part();
        }
        out.sections.emplace_back(std::move(q));
    }
    return out;
}

/// Input u-order sufficient for sections through z^{q_max}.
inline long section_budget(const Boundary& boundary, std::size_t q_max) {
    const long k = static_cast<long>(boundary.height());
    const long max_b = *std::max_element(boundary.period().begin(), boundary.period().end());
    return k * static_cast<long>(q_max) + k * (k - 1) / 2 + k * max_b + 8;
}

/// Sections for a boundary (and shape, with sigma specialized), computed at
/// the standard budget and recomputed at a larger one; any disagreement in
/// the first q_max + 1 coefficients raises PrecisionFault.
inline SectionGF section_gfs(const Boundary& boundary, std::optional<StepShape> shape, const Rational& sigma, std::size_t q_max) {
    auto run = [&](long budget) {
        for (int attempt = 0;; ++attempt) {
            try {
                return section_gfs(specialize(appell_data(boundary, shape, static_cast<std::size_t>(budget)), sigma), q_max);
            } catch (const Error& e) {
                if (e.code() != Errc::InsufficientOrder || attempt >= 4) throw;
                budget += budget / 2 + static_cast<long>(boundary.height());
            }
        }
    };
    const long budget = section_budget(boundary, q_max);
    SectionGF first = run(budget);
    SectionGF second = run(first.diagnostics.budget + 2 * static_cast<long>(boundary.height()) + 8);
    for (std::size_t j = 0; j < first.sections.size(); ++j)
        if (!(first.sections[j] == second.sections[j]))
            throw Error(Errc::PrecisionFault, "section " + std::to_string(j) + " changed when the budget was raised",
                        static_cast<std::int64_t>(j));
    return first;
}

/// sum_{i<r} c_i z^i + z^r sum_j z^j Q_j(z^k), through the last order all
/// sections determine.
inline TruncatedSeries<Rational> assemble_ogf(const SectionGF& sg) {
    const std::size_t k = sg.sections.size(), r = sg.prefix_length;
    std::size_t order = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < k; ++j) order = std::min(order, r + j + k * (sg.sections[j].order() + 1) - 1);
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i < r && i <= order; ++i) c[i] = sg.prefix_counts.at(i);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t q = 0; q <= sg.sections[j].order(); ++q) {
            const std::size_t n = r + j + k * q;
            if (n <= order) c[n] = sg.sections[j][q];
        }
    return TruncatedSeries<Rational>(std::move(c));
}

namespace detail {

// (-1)^{k+1} u^{-k} prod_m factor_m, returned as a series in z = u^k.
inline TruncatedSeries<Rational> collapse_product(const std::vector<RamifiedSeries<CycloNum>>& factors, unsigned k, std::size_t order) {
    RamifiedSeries<CycloNum> prod = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
    const long need = static_cast<long>(k * (order + 1));
    if (prod.order() < need) throw Error(Errc::InsufficientOrder, "product known only through u^" + std::to_string(prod.order()));
    std::vector<Rational> q(order + 1);
    for (long e = -prod.pole_order(); e <= need; ++e) {
        const CycloNum c = prod.coefficient(e);
        if (c.is_zero()) continue;
        if (e % static_cast<long>(k) != 0 || !c.is_rational() || e < static_cast<long>(k))
            throw Error(Errc::NonRationalOutput, "product has a non-rational term at u^" + std::to_string(e), e);
        Rational v = c.rational_part();
        if (k % 2 == 0) v = -v;
        q[static_cast<std::size_t>(e / static_cast<long>(k)) - 1] = v;
    }
    return TruncatedSeries<Rational>(std::move(q));
}

}  // namespace detail

/// Tennis ball problem: sum_q LP_{kq+1} z^q = ((-1)^{k+1}/z) prod_m tau_m/(1 - tau_m),
/// tau_m the branches of z = t^k (1-t)^l.
inline TruncatedSeries<Rational> tennis_q0_product(unsigned k, unsigned l, std::size_t order) {
    if (k < 1 || l < 1) throw Error(Errc::InvalidBoundary, "tennis boundary needs k, l >= 1");
    using S = TruncatedSeries<Rational>;
    const std::size_t u = k * (order + 2) + 2;
    const S one_minus_t = S::one(u) - S::monomial(Rational(1), 1, u);
    const S h = series_pow(one_minus_t, static_cast<long>(l));
    auto tau0 = solve_branch_zero(h, k, static_cast<long>(u));
    auto set = all_branches(tau0, k, h);
    // g(t) = t / (1 - t)
    const S g = series_shift_up(series_invert(one_minus_t), 1).truncated(u);
    auto g0 = compose(g, tau0);
    std::vector<RamifiedSeries<CycloNum>> factors;
    for (unsigned m = 0; m < k; ++m) factors.push_back(ramified_twist(g0, m, k));
    return detail::collapse_product(factors, k, order);
}

/// k = l: ((-1)^{k+1}/z) prod_m (C(xi^m z^{1/k}) - 1) with C the Catalan series.
inline TruncatedSeries<Rational> tennis_catalan_product(unsigned k, std::size_t order) {
    if (k < 1) throw Error(Errc::InvalidBoundary, "tennis boundary needs k >= 1");
    using S = TruncatedSeries<Rational>;
    const std::size_t u = k * (order + 2) + 2;
    // C(y) - 1 = (1 - 2y - sqrt(1 - 4y)) / (2y)
    const S root = series_sqrt(S::one(u + 1) - S::monomial(Rational(4), 1, u + 1));
    const S two_y_c = S::one(u + 1) - root;
    const S c_minus_one = series_shift_down(two_y_c, 1).map([](const Rational& x) { return Rational(x / 2); }) - S::one(u);
    auto base = RamifiedSeries<Rational>::from_series(k, c_minus_one);
    std::vector<RamifiedSeries<CycloNum>> factors;
    for (unsigned m = 0; m < k; ++m) factors.push_back(ramified_twist(base, m, k));
    return detail::collapse_product(factors, k, order);
}

struct AlternantResult {
    Rational determinant;
    Rational product_form;
    bool equal = false;
};

/// det[ tau_i^{k-1}/(1-tau_i), 1, tau_i, ..., tau_i^{k-2} ] against
/// (-1)^{k+1} prod_{i<j}(tau_j - tau_i) / prod_j (1 - tau_j).
inline AlternantResult alternant_check(const std::vector<Rational>& taus) {
    const std::size_t k = taus.size();
    if (k == 0) throw Error(Errc::PreconditionViolated, "need at least one value");
    for (std::size_t i = 0; i < k; ++i) {
        if (taus[i] == 1) throw Error(Errc::PreconditionViolated, "values must differ from 1");
        for (std::size_t j = 0; j < i; ++j)
            if (taus[i] == taus[j]) throw Error(Errc::PreconditionViolated, "values must be distinct");
    }
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        Rational p = 1;
        for (std::size_t j = 1; j < k; ++j) {
            m[i][j] = p;
            p *= taus[i];
        }
        m[i][0] = p / (1 - taus[i]);
    }
    AlternantResult r;
    r.determinant = exact_determinant(std::move(m));
    Rational num = 1, den = 1;
    for (std::size_t j = 0; j < k; ++j) {
        den *= 1 - taus[j];
        for (std::size_t i = 0; i < j; ++i) num *= taus[j] - taus[i];
    }
    r.product_form = (k % 2 ? 1 : -1) * num / den;
    r.equal = r.determinant == r.product_form;
    return r;
}

}  // namespace latpath
