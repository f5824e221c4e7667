#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace latpath {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<Integer>;

namespace detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void trim(std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient of a by a monic divisor; the remainder must vanish.
inline IntPoly divide_exact_monic(IntPoly a, const IntPoly& m) {
    const std::size_t dm = m.size() - 1;
    if (a.size() < m.size()) return {};
    IntPoly q(a.size() - dm);
    for (std::size_t i = a.size(); i-- > dm;) {
        Integer c = a[i];
        q[i - dm] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
    }
    trim(a);
    if (!a.empty()) throw Error(Errc::InexactDivision, "polynomial division left a remainder");
    return q;
}

}  // namespace detail

/// The k-th cyclotomic polynomial, computed as (x^k - 1) divided by the
/// cyclotomic polynomials of the proper divisors of k.
inline IntPoly cyclotomic_modulus(unsigned k) {
    if (k == 0) throw Error(Errc::PreconditionViolated, "cyclotomic order must be positive");
    IntPoly p(k + 1);
    p[0] = -1;
    p[k] = 1;
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0) p = detail::divide_exact_monic(std::move(p), cyclotomic_modulus(d));
    return p;
}

namespace detail {

inline constexpr unsigned kCachedModuli = 64;

inline const IntPoly& cached_modulus(unsigned k) {
    static const std::array<IntPoly, kCachedModuli + 1> table = [] {
        std::array<IntPoly, kCachedModuli + 1> t{};
        for (unsigned i = 1; i <= kCachedModuli; ++i) t[i] = cyclotomic_modulus(i);
        return t;
    }();
    if (k == 0 || k > kCachedModuli) throw Error(Errc::PreconditionViolated, "cyclotomic order out of supported range");
    return table[k];
}

using QPoly = std::vector<Rational>;

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder modulo a monic integer polynomial.
inline QPoly reduce(QPoly a, const IntPoly& m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        if (sgn(a[i]) == 0) continue;
        Rational c = a[i];
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * Rational(m[j]);
    }
    if (a.size() > dm) a.resize(dm);
    trim(a);
    return a;
}

// Polynomial division over Q: returns {quotient, remainder}.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - db);
    Rational lead_inv = Rational(1) / b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (sgn(a[i]) == 0) continue;
        Rational c = a[i] * lead_inv;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace detail

/// Element of Q[x]/Phi_k, with x standing for a primitive k-th root of
/// unity. Order 0 marks a plain rational that mixes with any field.
class CycloNum {
   public:
    CycloNum() = default;
    CycloNum(long c) : residue_{Rational(c)} { detail::trim(residue_); }
    CycloNum(Rational c) : residue_{std::move(c)} { detail::trim(residue_); }
    CycloNum(unsigned order, std::vector<Rational> residue) : order_(order), residue_(std::move(residue)) {
        if (order_ != 0) residue_ = detail::reduce(std::move(residue_), detail::cached_modulus(order_));
        detail::trim(residue_);
    }

    /// xi^power for a primitive k-th root of unity xi.
    static CycloNum root_of_unity(unsigned k, long power = 1) {
        long e = ((power % static_cast<long>(k)) + static_cast<long>(k)) % static_cast<long>(k);
        std::vector<Rational> r(static_cast<std::size_t>(e) + 1);
        r[static_cast<std::size_t>(e)] = 1;
        return CycloNum(k, std::move(r));
    }

    unsigned order() const noexcept { return order_; }
    const std::vector<Rational>& residue() const noexcept { return residue_; }
    bool is_zero() const noexcept { return residue_.empty(); }
    bool is_rational() const noexcept { return residue_.size() <= 1; }
    Rational rational_part() const { return residue_.empty() ? Rational(0) : residue_[0]; }

    CycloNum inverse() const {
        if (is_zero()) throw Error(Errc::NonUnitConstantTerm, "inverse of zero cyclotomic number");
        if (is_rational()) return CycloNum(order_, {Rational(1) / residue_[0]});
        // Extended Euclid: find s with s * residue = 1 mod Phi_k.
        const IntPoly& m = detail::cached_modulus(order_);
        detail::QPoly r0(m.begin(), m.end()), r1 = residue_;
        detail::QPoly s0, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::divmod(r0, r1);
            detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant since Phi_k is irreducible.
        Rational c = Rational(1) / r0[0];
        for (auto& x : s0) x *= c;
        return CycloNum(order_, std::move(s0));
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        unsigned k = common_order(a, b);
        std::vector<Rational> r = a.residue_;
        if (b.residue_.size() > r.size()) r.resize(b.residue_.size());
        for (std::size_t i = 0; i < b.residue_.size(); ++i) r[i] += b.residue_[i];
        return CycloNum(k, std::move(r), tag{});
    }
    friend CycloNum operator-(const CycloNum& a) {
        std::vector<Rational> r = a.residue_;
        for (auto& x : r) x = -x;
        return CycloNum(a.order_, std::move(r), tag{});
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        unsigned k = common_order(a, b);
        if (a.is_rational() || b.is_rational()) {
            const CycloNum& s = a.is_rational() ? a : b;
            const CycloNum& o = a.is_rational() ? b : a;
            Rational c = s.rational_part();
            std::vector<Rational> r = o.residue_;
            for (auto& x : r) x *= c;
            return CycloNum(k, std::move(r), tag{});
        }
        auto prod = detail::mul(a.residue_, b.residue_);
        return CycloNum(k, detail::reduce(std::move(prod), detail::cached_modulus(k)), tag{});
    }
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.order_ != 0 && b.order_ != 0 && a.order_ != b.order_) return false;
        return a.residue_ == b.residue_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNum& c) {
        if (c.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < c.residue_.size(); ++i) {
            if (sgn(c.residue_[i]) == 0) continue;
            if (!first) os << " + ";
            os << c.residue_[i];
            if (i >= 1) os << "*x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os;
    }

   private:
    struct tag {};
    // Residue already reduced; only trims.
    CycloNum(unsigned order, std::vector<Rational> residue, tag) : order_(order), residue_(std::move(residue)) {
        detail::trim(residue_);
    }

    static unsigned common_order(const CycloNum& a, const CycloNum& b) {
        if (a.order_ == 0) return b.order_;
        if (b.order_ == 0 || a.order_ == b.order_) return a.order_;
        throw Error(Errc::IncompatibleFields, "cyclotomic orders " + std::to_string(a.order_) + " and " +
                                                  std::to_string(b.order_) + " do not mix");
    }

    unsigned order_ = 0;
    std::vector<Rational> residue_;
};

template <>
struct coeff_traits<CycloNum> {
    static bool is_zero(const CycloNum& x) { return x.is_zero(); }
    static bool is_unit(const CycloNum& x) { return !x.is_zero(); }
    static CycloNum unit_inverse(const CycloNum& x) { return x.inverse(); }
    static CycloNum div_int(const CycloNum& x, long d) { return x * CycloNum(Rational(1) / Rational(d)); }
};

}  // namespace latpath
