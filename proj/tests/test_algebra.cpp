#include <gtest/gtest.h>

#include <random>

#include "latpath/cyclotomic.hpp"
#include "latpath/ramified_series.hpp"
#include "latpath/sigma_poly.hpp"
#include "latpath/truncated_series.hpp"

using namespace latpath;

namespace {

using QS = TruncatedSeries<Rational>;

QS random_series(std::mt19937& rng, std::size_t order, bool unit) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> c(order + 1);
    for (auto& x : c) {
        x = Rational(d(rng), 1 + (d(rng) + 5) % 3);
        x.canonicalize();
    }
    if (unit) c[0] = 1;
    return QS(std::move(c));
}

}  // namespace

TEST(Integer, GeneralizedBinomial) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(-1, 3), -1);
    EXPECT_EQ(binomial(-3, 2), 6);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(2, 5), 0);
}

TEST(Integer, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_THROW(parse_integer("12x"), Error);
}

TEST(SigmaPoly, Arithmetic) {
    SigmaPoly s = SigmaPoly::sigma();
    SigmaPoly p = (SigmaPoly(1) + s) * (SigmaPoly(1) + s);
    EXPECT_EQ(p, SigmaPoly(std::vector<Integer>{1, 2, 1}));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(SigmaPoly().degree(), -1);
    EXPECT_EQ(p.evaluate(Rational(-1)), 0);
    EXPECT_EQ(p.sum_of_coefficients(), 4);
    EXPECT_THROW(p.div_exact(Integer(2)), Error);
    EXPECT_EQ((Integer(2) * p).div_exact(Integer(2)), p);
}

TEST(Series, InverseRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QS a = random_series(rng, 12, true);
        QS prod = a * series_invert(a);
        EXPECT_EQ(prod, QS::one(12));
    }
    EXPECT_THROW(series_invert(QS::monomial(Rational(1), 1, 4)), Error);
}

TEST(Series, SqrtSquares) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QS a = random_series(rng, 10, true);
        QS r = series_sqrt(a);
        EXPECT_EQ(r * r, a);
    }
    EXPECT_THROW(series_sqrt(QS::constant(Rational(4), 3)), Error);
}

TEST(Series, ComposeAgainstDirectSum) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        QS a = random_series(rng, 6, false);
        QS b = random_series(rng, 9, false);
        std::vector<Rational> c = b.coefficients();
        c[0] = 0;
        b = QS(c);
        QS direct = QS::zero(9);
        QS power = QS::one(9);
        for (std::size_t i = 0; i <= 6; ++i) {
            direct = direct + a[i] * power;
            power = power * b;
        }
        QS comp = series_compose(a, b);
        for (std::size_t i = 0; i <= comp.order(); ++i) EXPECT_EQ(comp[i], direct[i]) << i;
    }
    EXPECT_THROW(series_compose(QS::one(3), QS::one(3)), Error);
}

TEST(Series, ComposeOrderBound) {
    // A known to t^2, B = t^2: A(B) is known to t^5.
    QS a(std::vector<Rational>{1, 1, 1});
    QS b = QS::monomial(Rational(1), 2, 20);
    EXPECT_EQ(series_compose(a, b).order(), 5u);
}

TEST(Series, RationalPowerMatchesIntegerPower) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        QS a = random_series(rng, 10, true);
        EXPECT_EQ(series_pow(a, Rational(3)), series_pow(a, 3L));
        EXPECT_EQ(series_pow(a, Rational(-2)), series_pow(a, -2L));
        QS h = series_pow(a, Rational(1, 3));
        EXPECT_EQ(h * h * h, a);
    }
}

TEST(Series, Shifts) {
    QS a(std::vector<Rational>{0, 0, 3, 4});
    EXPECT_EQ(series_shift_down(a, 2), QS(std::vector<Rational>{3, 4}));
    EXPECT_THROW(series_shift_down(a, 3), Error);
    EXPECT_EQ(series_shift_up(a, 1).order(), 4u);
}

TEST(Cyclotomic, Moduli) {
    EXPECT_EQ(cyclotomic_modulus(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_modulus(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_modulus(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_modulus(12), (IntPoly{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootsAndInverses) {
    for (unsigned k = 1; k <= 12; ++k) {
        CycloNum xi = CycloNum::root_of_unity(k);
        CycloNum p(Rational(1));
        for (unsigned i = 0; i < k; ++i) p *= xi;
        EXPECT_EQ(p, CycloNum(k, {Rational(1)})) << k;
        CycloNum sum(k, {});
        for (unsigned i = 0; i < k; ++i) sum += CycloNum::root_of_unity(k, i);
        EXPECT_TRUE(k == 1 ? sum == CycloNum(k, {Rational(1)}) : sum.is_zero()) << k;
        CycloNum x = CycloNum(Rational(2)) + xi + CycloNum(Rational(3)) * xi * xi;
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), CycloNum(k, {Rational(1)})) << k;
    }
    EXPECT_THROW(CycloNum::root_of_unity(3) + CycloNum::root_of_unity(5), Error);
    EXPECT_EQ(coeff_traits<CycloNum>::div_int(CycloNum(Rational(3)), -2), CycloNum(Rational(-3, 2)));
}

TEST(Ramified, ProductTracksOrder) {
    using RS = RamifiedSeries<Rational>;
    RS a(2, 1, {1, 2, 3});  // u^-1 + 2 + 3u + O(u^2)
    RS b(2, 0, {0, 1, 1});  // u + u^2 + O(u^3)
    RS c = a * b;
    EXPECT_EQ(c.order(), 1);
    EXPECT_EQ(c.coefficient(0), 1);
    EXPECT_EQ(c.coefficient(1), 3);
    EXPECT_THROW(c.coefficient(2), Error);
    RS inv = b.inverse();
    EXPECT_EQ(inv.pole_order(), 1);
    RS one = inv * b;
    EXPECT_EQ(one.coefficient(0), 1);
    for (long e = 1; e <= one.order(); ++e) EXPECT_EQ(one.coefficient(e), 0);
    EXPECT_THROW(RS(2, 0, {0, 0}).inverse(), Error);
}

TEST(Ramified, ComposeMatchesSeriesCompose) {
    std::mt19937 rng(13);
    QS a = random_series(rng, 8, false);
    std::vector<Rational> bc = random_series(rng, 8, false).coefficients();
    bc[0] = 0;
    bc[1] = 1;
    QS b(bc);
    auto tau = RamifiedSeries<Rational>::from_series(1, b);
    auto r = compose(a, tau);
    QS direct = series_compose(a, b);
    ASSERT_EQ(r.order(), static_cast<long>(direct.order()));
    for (std::size_t i = 0; i <= direct.order(); ++i) EXPECT_EQ(r.coefficient(static_cast<long>(i)), direct[i]);
}

TEST(Ramified, LinearSolveRecoversSolution) {
    using RS = RamifiedSeries<Rational>;
    // [[1, u], [u, 1 + u^2]] x = M [1+u, 2]
    RS one = RS::constant(1, Rational(1), 10);
    RS u = RS::monomial(1, Rational(1), 1, 10);
    SeriesMatrix<Rational> m{{one, u}, {u, one + u * u}};
    RS x0 = one + u, x1 = RS::constant(1, Rational(2), 10);
    std::vector<RS> rhs{m[0][0] * x0 + m[0][1] * x1, m[1][0] * x0 + m[1][1] * x1};
    auto sol = linear_solve_series(m, rhs);
    for (long e = 0; e <= sol.guaranteed_order; ++e) {
        EXPECT_EQ(sol.x[0].coefficient(e), x0.coefficient(e));
        EXPECT_EQ(sol.x[1].coefficient(e), x1.coefficient(e));
    }
    EXPECT_EQ(sol.determinant.coefficient(0), 1);
    SeriesMatrix<Rational> sing{{one, one}, {one, one}};
    EXPECT_THROW(linear_solve_series(sing, {one, one}), Error);
}
