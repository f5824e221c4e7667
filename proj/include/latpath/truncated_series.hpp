#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace latpath {

/// Power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}) over the ring R.
/// The order N is part of the value: coefficients beyond it are unknown, so
/// every operation reports only what it can prove.
template <Coefficient R>
class TruncatedSeries {
   public:
    using coefficient_type = R;

    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back(0);
    }
    TruncatedSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, R(0));
    }

    static TruncatedSeries constant(R c, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        v[0] = std::move(c);
        return TruncatedSeries(std::move(v));
    }
    static TruncatedSeries zero(std::size_t order) { return constant(R(0), order); }
    static TruncatedSeries one(std::size_t order) { return constant(R(1), order); }
    /// c * t^power, truncated at `order`.
    static TruncatedSeries monomial(R c, std::size_t power, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        if (power <= order) v[power] = std::move(c);
        return TruncatedSeries(std::move(v));
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Index of the first nonzero coefficient; order()+1 if none is known.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return i;
        return coeffs_.size();
    }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw Error(Errc::PreconditionViolated, "cannot raise the order of a truncated series");
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(coeffs_[0]))>;
        std::vector<S> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return TruncatedSeries<S>(std::move(out));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> r(n + 1);
        for (std::size_t i = 0; i <= n; ++i) r[i] = a.coeffs_[i] + b.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> r(n + 1);
        for (std::size_t i = 0; i <= n; ++i) r[i] = a.coeffs_[i] - b.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        std::vector<R> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator*(const R& c, const TruncatedSeries& a) {
        std::vector<R> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> r(n + 1, R(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return TruncatedSeries(std::move(r));
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a) {
        os << "[";
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) os << (i ? ", " : "") << a.coeffs_[i];
        return os << "] + O(t^" << a.coeffs_.size() << ")";
    }

   private:
    std::vector<R> coeffs_;
};

/// Cauchy product truncated at min(order A, order B).
template <Coefficient R>
TruncatedSeries<R> series_multiply(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return a * b;
}

template <Coefficient R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& a) {
    using T = coeff_traits<R>;
    if (!T::is_unit(a[0])) throw Error(Errc::NonUnitConstantTerm, "constant term is not invertible");
    const std::size_t n = a.order();
    const R c0 = T::unit_inverse(a[0]);
    std::vector<R> b(n + 1, R(0));
    b[0] = c0;
    for (std::size_t k = 1; k <= n; ++k) {
        R acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            if (!is_zero(a[i])) acc += a[i] * b[k - i];
        b[k] = -(c0 * acc);
    }
    return TruncatedSeries<R>(std::move(b));
}

/// A(B(t)). B must have zero constant term. The output order is
/// min(order B, (order A + 1) * val(B) - 1).
template <Coefficient R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    if (!is_zero(b[0])) throw Error(Errc::NonzeroInnerConstant, "inner series has a nonzero constant term");
    const std::size_t v = b.valuation();
    std::size_t n = b.order();
    if (v <= b.order()) n = std::min(n, (a.order() + 1) * v - 1);
    TruncatedSeries<R> inner = b.truncated(n);
    TruncatedSeries<R> acc = TruncatedSeries<R>::constant(a[a.order()], n);
    for (std::size_t i = a.order(); i-- > 0;) {
        acc = acc * inner;
        std::vector<R> c = acc.coefficients();
        c[0] += a[i];
        acc = TruncatedSeries<R>(std::move(c));
    }
    return acc;
}

/// Square root with constant term 1. Needs exact division by 2 in R.
template <Coefficient R>
TruncatedSeries<R> series_sqrt(const TruncatedSeries<R>& a) {
    if (!(a[0] == R(1))) throw Error(Errc::BadConstantTerm, "square root needs constant term 1");
    const std::size_t n = a.order();
    std::vector<R> r(n + 1, R(0));
    r[0] = R(1);
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
        r[k] = coeff_traits<R>::div_int(acc, 2);
    }
    return TruncatedSeries<R>(std::move(r));
}

/// A^e for any integer e; negative powers go through series_invert.
template <Coefficient R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, long e) {
    TruncatedSeries<R> base = e < 0 ? series_invert(a) : a;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncatedSeries<R> acc = TruncatedSeries<R>::one(a.order());
    while (k) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return acc;
}

/// A^alpha for rational alpha, A(0) = 1, via n p_n = sum_j ((alpha+1) j - n) a_j p_{n-j}.
inline TruncatedSeries<Rational> series_pow(const TruncatedSeries<Rational>& a, const Rational& alpha) {
    if (a[0] != 1) throw Error(Errc::BadConstantTerm, "rational power needs constant term 1");
    const std::size_t n = a.order();
    std::vector<Rational> p(n + 1);
    p[0] = 1;
    Rational alpha1 = alpha + 1;
    alpha1.canonicalize();
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(a[j]) == 0) continue;
            acc += (alpha1 * static_cast<long>(j) - static_cast<long>(k)) * a[j] * p[k - j];
        }
        p[k] = acc / static_cast<long>(k);
    }
    return TruncatedSeries<Rational>(std::move(p));
}

/// A / t^m; the first m coefficients must vanish. Order drops by m.
template <Coefficient R>
TruncatedSeries<R> series_shift_down(const TruncatedSeries<R>& a, std::size_t m) {
    if (m > a.order()) throw Error(Errc::PreconditionViolated, "shift exceeds the known order");
    for (std::size_t i = 0; i < m; ++i)
        if (!is_zero(a[i])) throw Error(Errc::NonUnitConstantTerm, "division by t^m of a series with lower terms", static_cast<std::int64_t>(i));
    return TruncatedSeries<R>(std::vector<R>(a.coefficients().begin() + static_cast<std::ptrdiff_t>(m), a.coefficients().end()));
}

/// t^m * A. Order rises by m.
template <Coefficient R>
TruncatedSeries<R> series_shift_up(const TruncatedSeries<R>& a, std::size_t m) {
    std::vector<R> c(m, R(0));
    c.insert(c.end(), a.coefficients().begin(), a.coefficients().end());
    return TruncatedSeries<R>(std::move(c));
}

}  // namespace latpath
