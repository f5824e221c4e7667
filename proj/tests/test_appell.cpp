#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "latpath/appell.hpp"

using namespace latpath;

namespace {

const std::vector<StepShape> kShapes{{1, 1}, {1, 2}, {2, 1}, {3, 2}, {0, 1}, {2, 2}};

}  // namespace

TEST(Recursion, LatticeMatchesDp) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        Boundary b = gen::random_boundary(rng);
        auto rec = lp_recursion(b, 10).values;
        for (std::size_t n = 0; n <= 10; ++n) ASSERT_EQ(rec[n], count_lp_dp(b, n)) << b << " n=" << n;
    }
}

TEST(Recursion, DiagonalMatchesDp) {
    std::mt19937 rng(2);
    for (StepShape s : kShapes) {
        for (int trial = 0; trial < 8; ++trial) {
            Boundary b = gen::random_slope_valid(rng, s);
            auto rec = sp_recursion(b, s, 8).values;
            for (std::size_t n = 0; n <= 8; ++n)
                ASSERT_EQ(rec[n], count_sp_dp(b, s, n)) << b << " shape " << s.a << "," << s.b << " n=" << n;
        }
    }
}

TEST(Recursion, SlopeViolationRejected) {
    EXPECT_THROW(sp_recursion(make_arithmetic(2, 0), StepShape{1, 1}, 3), Error);
    EXPECT_THROW(sp_recursion(Boundary({}, {1}), StepShape{0, 0}, 3), Error);
}

TEST(Recursion, CatalanAndSchroder) {
    auto lp = lp_recursion(make_staircase(Rational(1)), 5).values;
    EXPECT_EQ(lp, (std::vector<Integer>{1, 1, 2, 5, 14, 42}));
    auto sp = sp_recursion(Boundary({}, {1}), StepShape{1, 1}, 3).values;
    EXPECT_EQ(sp[3], SigmaPoly(std::vector<Integer>{5, 10, 6, 1}));
}

TEST(Gould, SeriesSolvesFunctionalEquation) {
    for (Term a = 0; a <= 4; ++a) {
        auto f = gould_f(a, 15);
        using QS = TruncatedSeries<Rational>;
        QS lhs = f - QS::one(15);
        QS rhs = series_shift_up(series_pow(f, static_cast<long>(a)), 1).truncated(15);
        EXPECT_EQ(lhs, rhs) << a;
    }
}

TEST(Gould, BinomialIdentity) {
    using QS = TruncatedSeries<Rational>;
    for (Term a = 0; a <= 4; ++a) {
        auto f = gould_f(a, 15);
        QS denom = Rational(a) * QS::one(15) + Rational(1 - a) * f;
        for (Term s = 0; s <= 5; ++s) {
            std::vector<Rational> c;
            for (Term j = 0; j <= 15; ++j) c.emplace_back(binomial(s + a * j, j));
            QS rhs = series_pow(f, static_cast<long>(s + 1)) * series_invert(denom);
            EXPECT_EQ(QS(c), rhs) << a << " " << s;
        }
    }
}

TEST(Appell, ColumnSeriesClosedForm) {
    using S = TruncatedSeries<SigmaPoly>;
    const std::size_t order = 10;
    for (StepShape sh : {StepShape{1, 1}, StepShape{1, 2}, StepShape{2, 1}, StepShape{3, 2}}) {
        S big_f = capital_F(sh, order);
        S one_minus_t = S::one(order) - S::monomial(SigmaPoly(1), 1, order);
        S denom = SigmaPoly(sh.a) * S::one(order) + SigmaPoly(1 - sh.a) * big_f;
        S front = big_f * series_invert(denom);
        for (Term s = 0; s <= 6; ++s)
            EXPECT_EQ(sr_column_series(s, sh, order), front * series_pow(one_minus_t * big_f, static_cast<long>(s)))
                << sh.a << "," << sh.b << " s=" << s;
    }
}

TEST(Appell, LatticeResidual) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Boundary b = gen::random_boundary(rng);
        EXPECT_EQ(appell_residual(b, std::nullopt, 20), 20u) << b;
    }
}

TEST(Appell, SymbolicShapeResidual) {
    std::mt19937 rng(4);
    for (StepShape s : {StepShape{1, 1}, StepShape{1, 2}, StepShape{2, 1}, StepShape{3, 2}})
        for (int trial = 0; trial < 3; ++trial) {
            Boundary b = gen::random_slope_valid(rng, s);
            EXPECT_EQ(appell_residual(b, s, 12), 12u) << b;
        }
}

TEST(Appell, InjectedFaultIsLocated) {
    Boundary b = make_tennis(2, 2);
    auto data = appell_data(b, std::nullopt, 10);
    std::vector<SigmaPoly> counts;
    for (auto& v : lp_recursion(b, 10).values) counts.emplace_back(v);
    counts[7] += SigmaPoly(1);
    try {
        appell_residual(data, counts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ResidualNonzero);
        EXPECT_EQ(e.index(), 7);
    }
}

TEST(Appell, ReducedRightSide) {
    // With the prefix removed, the tail counts satisfy
    // sum_{n>=0} c_{r+n} t^n phi^{s_{r+n} - p} = Psi'.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Boundary b = gen::random_boundary(rng);
        const std::size_t order = 12, r = b.prefix_length();
        auto data = appell_data(b, std::nullopt, order);
        auto counts = lp_recursion(b, order + r).values;
        using S = TruncatedSeries<SigmaPoly>;
        S total = S::zero(order);
        for (std::size_t n = 0; n <= order; ++n)
            total = total + SigmaPoly(counts[r + n]) *
                                series_shift_up(series_pow(data.phi, static_cast<long>(b.term(r + n) - b.offset())), n).truncated(order);
        EXPECT_EQ(total, data.reduced_psi) << b;
    }
}

TEST(Appell, Specialize) {
    auto data = appell_data(Boundary({}, {1}), StepShape{1, 1}, 6);
    auto q = specialize(data, Rational(1));
    // phi = (1 - t) F at sigma = 1.
    EXPECT_EQ(q.phi[0], 1);
    EXPECT_EQ(q.phi[1], data.phi[1].evaluate(Rational(1)));
}

TEST(Parity, RandomSlopeValidBoundaries) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        Boundary b = gen::random_slope_valid(rng, StepShape{1, 1});
        EXPECT_TRUE(parity_check(b, 12)) << b;
    }
}

TEST(Parking, RecursionMatchesBruteForce) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Boundary b = gen::random_boundary(rng, 4);
        auto rec = parking_recursion(b, 5).values;
        for (std::size_t n = 0; n <= 5; ++n) {
            Integer bf;
            try {
                bf = count_parking_bf(b, n);
            } catch (const Error&) {
                continue;
            }
            ASSERT_EQ(rec[n], bf) << b << " n=" << n;
        }
    }
}

TEST(Parking, ClassicalCount) {
    auto p = parking_recursion(Boundary({}, {1}), 8).values;
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(p[n], ipow(Integer(static_cast<long>(n + 1)), n - 1));
}
