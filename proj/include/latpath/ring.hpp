#pragma once

#include <concepts>

#include "integer.hpp"

namespace latpath {

/// Per-ring hooks the series kernel needs beyond +, -, * and construction
/// from a small integer. Specialized next to each coefficient type.
template <class R>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool is_unit(const Rational& x) { return sgn(x) != 0; }
    static Rational unit_inverse(const Rational& x) { return Rational(1) / x; }
    static Rational div_int(const Rational& x, long d) { return x / Rational(d); }
};

template <class R>
concept Coefficient = requires(const R& a, const R& b, long d) {
    { R(0) };
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { coeff_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
    { coeff_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { coeff_traits<R>::unit_inverse(a) } -> std::convertible_to<R>;
    { coeff_traits<R>::div_int(a, d) } -> std::convertible_to<R>;
};

template <class R>
bool is_zero(const R& x) {
    return coeff_traits<R>::is_zero(x);
}

}  // namespace latpath
