#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace latpath {

/// Polynomial in the diagonal-step weight sigma with integer coefficients,
/// lowest degree first. Canonical: no trailing zero coefficients.
class SigmaPoly {
   public:
    SigmaPoly() = default;
    SigmaPoly(long c) : coeffs_{Integer(c)} { trim(); }
    SigmaPoly(Integer c) : coeffs_{std::move(c)} { trim(); }
    explicit SigmaPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static SigmaPoly sigma() { return monomial(Integer(1), 1); }
    static SigmaPoly monomial(Integer c, std::size_t degree) {
        std::vector<Integer> v(degree + 1);
        v[degree] = std::move(c);
        return SigmaPoly(std::move(v));
    }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer(0); }

    Rational evaluate(const Rational& sigma) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * sigma + Rational(*it);
        return acc;
    }

    Integer sum_of_coefficients() const {
        Integer s;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    SigmaPoly& operator+=(const SigmaPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    SigmaPoly& operator-=(const SigmaPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    SigmaPoly& operator*=(const SigmaPoly& o) { return *this = *this * o; }

    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
    friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
    friend SigmaPoly operator-(SigmaPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return SigmaPoly(std::move(r));
    }
    friend SigmaPoly operator*(const Integer& c, SigmaPoly p) {
        for (auto& x : p.coeffs_) x *= c;
        p.trim();
        return p;
    }
    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact division by an integer; throws InexactDivision otherwise.
    SigmaPoly div_exact(const Integer& d) const {
        if (d == 0) throw Error(Errc::InexactDivision, "division of sigma-polynomial by zero");
        std::vector<Integer> r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
                throw Error(Errc::InexactDivision, "sigma-polynomial coefficient not divisible by " + d.get_str());
            mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
        }
        return SigmaPoly(std::move(r));
    }

    friend std::ostream& operator<<(std::ostream& os, const SigmaPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t d = 0; d < p.coeffs_.size(); ++d) {
            const auto& c = p.coeffs_[d];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Integer m = abs(c);
            if (d == 0 || m != 1) os << m;
            if (d >= 1) os << "s";
            if (d >= 2) os << "^" << d;
            first = false;
        }
        return os;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

template <>
struct coeff_traits<SigmaPoly> {
    static bool is_zero(const SigmaPoly& x) { return x.is_zero(); }
    static bool is_unit(const SigmaPoly& x) { return x.degree() == 0 && abs(x.coefficient(0)) == 1; }
    static SigmaPoly unit_inverse(const SigmaPoly& x) {
        if (!is_unit(x)) throw Error(Errc::NonUnitConstantTerm, "sigma-polynomial is not a unit");
        return x;
    }
    static SigmaPoly div_int(const SigmaPoly& x, long d) { return x.div_exact(Integer(d)); }
};

}  // namespace latpath
