#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "truncated_series.hpp"

namespace latpath {

/// Fractional Laurent series sum_{e >= -p} c_e u^e with u = z^{1/k}, known
/// through u^order. Products, sums and inverses track the exponent through
/// which the result is provably correct.
template <Coefficient R>
class RamifiedSeries {
   public:
    using coefficient_type = R;

    /// coeffs[i] is the coefficient of u^{i - pole_order}.
    RamifiedSeries(unsigned ramification, long pole_order, std::vector<R> coeffs)
        : k_(ramification), low_(-pole_order), coeffs_(std::move(coeffs)) {
        if (k_ == 0) throw Error(Errc::PreconditionViolated, "ramification must be positive");
        if (pole_order < 0) throw Error(Errc::PreconditionViolated, "pole order must be non-negative");
        normalize();
    }

    static RamifiedSeries from_series(unsigned ramification, const TruncatedSeries<R>& s) {
        return RamifiedSeries(ramification, 0, s.coefficients());
    }
    static RamifiedSeries constant(unsigned ramification, R c, long order) {
        std::vector<R> v(static_cast<std::size_t>(std::max(order, 0L)) + 1, R(0));
        v[0] = std::move(c);
        return RamifiedSeries(ramification, 0, std::move(v));
    }
    /// c * u^exponent with nothing known past `order`.
    static RamifiedSeries monomial(unsigned ramification, R c, long exponent, long order) {
        long low = std::min(exponent, 0L);
        std::vector<R> v(static_cast<std::size_t>(order - low + 1), R(0));
        if (exponent <= order) v[static_cast<std::size_t>(exponent - low)] = std::move(c);
        return RamifiedSeries(ramification, -low, std::move(v));
    }

    unsigned ramification() const noexcept { return k_; }
    long pole_order() const noexcept { return -low_; }
    long order() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of u^e; zero below the pole order, error past the order.
    R coefficient(long e) const {
        if (e < low_) return R(0);
        if (e > order()) throw Error(Errc::PreconditionViolated, "coefficient requested beyond the known order", e);
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }

    /// Exponent of the first nonzero known coefficient, order()+1 if none.
    long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return low_ + static_cast<long>(i);
        return order() + 1;
    }

    RamifiedSeries truncated(long order) const {
        if (order > this->order()) throw Error(Errc::PreconditionViolated, "cannot raise the order of a ramified series");
        std::vector<R> v(coeffs_.begin(), coeffs_.begin() + std::max<long>(order - low_ + 1, 0));
        return RamifiedSeries(k_, -low_, std::move(v), raw{});
    }

    /// The non-negative part as a power series in u; requires no pole terms.
    TruncatedSeries<R> to_series() const {
        for (long e = low_; e < 0; ++e)
            if (!is_zero(coefficient(e))) throw Error(Errc::PreconditionViolated, "series has pole terms", e);
        if (order() < 0) throw Error(Errc::PreconditionViolated, "nothing known at non-negative exponents");
        return TruncatedSeries<R>(std::vector<R>(coeffs_.begin() - low_, coeffs_.end()));
    }

    friend RamifiedSeries operator+(const RamifiedSeries& a, const RamifiedSeries& b) { return add(a, b, false); }
    friend RamifiedSeries operator-(const RamifiedSeries& a, const RamifiedSeries& b) { return add(a, b, true); }
    friend RamifiedSeries operator-(const RamifiedSeries& a) {
        std::vector<R> v(a.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
        return RamifiedSeries(a.k_, -a.low_, std::move(v), raw{});
    }
    friend RamifiedSeries operator*(const R& c, const RamifiedSeries& a) {
        std::vector<R> v(a.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
        return RamifiedSeries(a.k_, -a.low_, std::move(v));
    }
    friend RamifiedSeries operator*(const RamifiedSeries& a, const RamifiedSeries& b) {
        check_same(a, b);
        const long va = a.valuation(), vb = b.valuation();
        const long oa = a.order(), ob = b.order();
        const long low = a.low_ + b.low_;
        const long order = std::min(oa + vb, ob + va);
        std::vector<R> v(static_cast<std::size_t>(std::max(order - low + 1, 0L)), R(0));
        for (long i = va; i <= oa; ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i - a.low_)];
            if (is_zero(ai)) continue;
            for (long j = vb; j <= ob && i + j <= order; ++j)
                v[static_cast<std::size_t>(i + j - low)] += ai * b.coeffs_[static_cast<std::size_t>(j - b.low_)];
        }
        return RamifiedSeries(a.k_, -low, std::move(v));
    }

    /// 1/A. Throws SingularWithinPrecision when no nonzero coefficient is known.
    RamifiedSeries inverse() const {
        const long v = valuation();
        if (v > order()) throw Error(Errc::SingularWithinPrecision, "no nonzero coefficient within the known order");
        const std::size_t rel = static_cast<std::size_t>(order() - v);
        std::vector<R> unit(coeffs_.begin() + (v - low_), coeffs_.end());
        auto inv = series_invert(TruncatedSeries<R>(std::move(unit), rel));
        // 1/A = u^{-v} * inv
        const long low = std::min(-v, 0L);
        const long ord = -v + static_cast<long>(rel);
        std::vector<R> out(static_cast<std::size_t>(std::max(ord - low + 1, 0L)), R(0));
        for (std::size_t i = 0; i <= rel; ++i) {
            long e = -v + static_cast<long>(i);
            if (e >= low) out[static_cast<std::size_t>(e - low)] = inv[i];
        }
        return RamifiedSeries(k_, -low, std::move(out));
    }

    friend RamifiedSeries operator/(const RamifiedSeries& a, const RamifiedSeries& b) { return a * b.inverse(); }

    /// A^e for e >= 1.
    RamifiedSeries pow(unsigned long e) const {
        if (e == 0) throw Error(Errc::PreconditionViolated, "pow needs a positive exponent");
        RamifiedSeries base = *this;
        std::optional<RamifiedSeries> acc;
        while (e) {
            if (e & 1u) acc = acc ? *acc * base : base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return *acc;
    }

    /// A + c for an exact constant c; the order is unchanged.
    RamifiedSeries plus_constant(const R& c) const {
        if (order() < 0) return *this;
        RamifiedSeries r = *this;
        if (r.low_ > 0) throw Error(Errc::PreconditionViolated, "internal: positive low exponent");
        r.coeffs_[static_cast<std::size_t>(-r.low_)] += c;
        return r;
    }

    template <class F>
    auto map_with_exponent(F&& f) const {
        using S = std::decay_t<decltype(f(coeffs_[0], 0L))>;
        std::vector<S> out;
        out.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.push_back(f(coeffs_[i], low_ + static_cast<long>(i)));
        return RamifiedSeries<S>(k_, -low_, std::move(out));
    }

    friend bool operator==(const RamifiedSeries& a, const RamifiedSeries& b) {
        return a.k_ == b.k_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RamifiedSeries& a) {
        os << "{k=" << a.k_ << ": ";
        bool first = true;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            os << (first ? "" : " + ") << "(" << a.coeffs_[i] << ")u^" << a.low_ + static_cast<long>(i);
            first = false;
        }
        return os << (first ? "0" : "") << " + O(u^" << a.order() + 1 << ")}";
    }

   private:
    template <Coefficient>
    friend class RamifiedSeries;
    struct raw {};
    RamifiedSeries(unsigned k, long pole, std::vector<R> coeffs, raw) : k_(k), low_(-pole), coeffs_(std::move(coeffs)) {}

    // Drop leading zero pole terms so that pole_order() is the true pole order.
    void normalize() {
        std::size_t drop = 0;
        while (low_ + static_cast<long>(drop) < 0 && drop < coeffs_.size() && is_zero(coeffs_[drop])) ++drop;
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
        low_ += static_cast<long>(drop);
    }

    static void check_same(const RamifiedSeries& a, const RamifiedSeries& b) {
        if (a.k_ != b.k_) throw Error(Errc::PreconditionViolated, "ramification mismatch");
    }

    static RamifiedSeries add(const RamifiedSeries& a, const RamifiedSeries& b, bool negate) {
        check_same(a, b);
        const long low = std::min(a.low_, b.low_);
        const long order = std::min(a.order(), b.order());
        std::vector<R> v(static_cast<std::size_t>(std::max(order - low + 1, 0L)), R(0));
        for (long e = low; e <= order; ++e) {
            R x = a.coefficient(e);
            R y = b.coefficient(e);
            v[static_cast<std::size_t>(e - low)] = negate ? R(x - y) : R(x + y);
        }
        return RamifiedSeries(a.k_, -low, std::move(v));
    }

    unsigned k_ = 1;
    long low_ = 0;
    std::vector<R> coeffs_;
};

/// A(tau) for a power series A and a ramified series tau of positive
/// valuation, by Horner's rule. The leading coefficient enters with the
/// precision of A's truncation, so the result is known exactly as far as
/// the truncations of A and tau allow.
template <Coefficient R>
RamifiedSeries<R> compose(const TruncatedSeries<R>& a, const RamifiedSeries<R>& tau) {
    const long v = tau.valuation();
    if (v <= 0) throw Error(Errc::NonzeroInnerConstant, "inner series must have positive valuation");
    const unsigned k = tau.ramification();
    const long n = static_cast<long>(a.order());
    // a_N + O(u^v): the unknown tail a_{N+1} tau^{N+1} + ... starts at u^{v(N+1)}.
    RamifiedSeries<R> acc = RamifiedSeries<R>::constant(k, a[a.order()], std::min(v - 1, tau.order()));
    for (long i = n - 1; i >= 0; --i)
        acc = (acc * tau).plus_constant(a[static_cast<std::size_t>(i)]);
    return acc;
}

/// Twist: the coefficient of u^i becomes xi^{m i} c_i with xi
/// a primitive k-th root of unity, i.e. tau(u) -> tau(xi^m u).
inline RamifiedSeries<CycloNum> ramified_twist(const RamifiedSeries<Rational>& tau, long m, unsigned k) {
    return tau.map_with_exponent([&](const Rational& c, long e) {
        if (sgn(c) == 0) return CycloNum(k, {});
        return CycloNum::root_of_unity(k, m * e) * CycloNum(c);
    });
}

/// Coefficient-ring embedding Q -> Q(xi_k).
inline RamifiedSeries<CycloNum> embed(const RamifiedSeries<Rational>& tau, unsigned k) { return ramified_twist(tau, 0, k); }

template <Coefficient R>
using SeriesMatrix = std::vector<std::vector<RamifiedSeries<R>>>;

template <Coefficient R>
struct SeriesSolution {
    std::vector<RamifiedSeries<R>> x;
    RamifiedSeries<R> determinant;
    /// Smallest order among the solution components.
    long guaranteed_order = 0;
};

/// Solves M x = rhs exactly over truncated Laurent-Puiseux series by
/// Gaussian elimination, pivoting on the entry of least valuation.
template <Coefficient R>
SeriesSolution<R> linear_solve_series(SeriesMatrix<R> m, std::vector<RamifiedSeries<R>> rhs) {
    const std::size_t n = m.size();
    if (n == 0 || rhs.size() != n) throw Error(Errc::PreconditionViolated, "system must be square and non-empty");
    for (const auto& row : m)
        if (row.size() != n) throw Error(Errc::PreconditionViolated, "system must be square");

    bool negate = false;
    std::vector<RamifiedSeries<R>> pivot_inv;
    pivot_inv.reserve(n);
    std::optional<RamifiedSeries<R>> det;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        long best_val = 0;
        for (std::size_t r = c; r < n; ++r) {
            long v = m[r][c].valuation();
            if (v > m[r][c].order()) continue;
            if (best == n || v < best_val) {
                best = r;
                best_val = v;
            }
        }
        if (best == n)
            throw Error(Errc::SingularWithinPrecision, "no pivot of finite valuation in column " + std::to_string(c),
                        static_cast<std::int64_t>(c));
        if (best != c) {
            std::swap(m[best], m[c]);
            std::swap(rhs[best], rhs[c]);
            negate = !negate;
        }
        det = det ? *det * m[c][c] : m[c][c];
        pivot_inv.push_back(m[c][c].inverse());
        for (std::size_t r = c + 1; r < n; ++r) {
            RamifiedSeries<R> f = m[r][c] * pivot_inv[c];
            for (std::size_t j = c + 1; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
            rhs[r] = rhs[r] - f * rhs[c];
        }
    }
    std::vector<RamifiedSeries<R>> x(n, rhs[0]);
    long guaranteed = std::numeric_limits<long>::max();
    for (std::size_t c = n; c-- > 0;) {
        RamifiedSeries<R> acc = rhs[c];
        for (std::size_t j = c + 1; j < n; ++j) acc = acc - m[c][j] * x[j];
        x[c] = acc * pivot_inv[c];
        guaranteed = std::min(guaranteed, x[c].order());
    }
    if (negate) det = -*det;
    return {std::move(x), std::move(*det), guaranteed};
}

}  // namespace latpath
