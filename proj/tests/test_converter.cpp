#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "latpath/ogf_converter.hpp"
#include "leibniz.hpp"

using namespace latpath;

namespace {

using QS = TruncatedSeries<Rational>;

QS one_minus_t_pow(long l, std::size_t order) {
    return series_pow(QS::one(order) - QS::monomial(Rational(1), 1, order), l);
}

// c_n = (1/n) [t^{n-1}] h(t)^{-n/k}
Rational lagrange_coefficient(const QS& h, unsigned k, long n) {
    Rational alpha(-n, static_cast<long>(k));
    alpha.canonicalize();
    QS p = series_pow(h, alpha);
    return p[static_cast<std::size_t>(n - 1)] / n;
}

std::vector<Integer> subsequence(const std::vector<Integer>& v, std::size_t start, std::size_t step, std::size_t count) {
    std::vector<Integer> out;
    for (std::size_t q = 0; q < count; ++q) out.push_back(v.at(start + q * step));
    return out;
}

std::vector<Integer> as_integers(const QS& s) {
    std::vector<Integer> out;
    for (const auto& c : s.coefficients()) {
        EXPECT_TRUE(is_integral(c));
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace

TEST(Branch, TrivialAndCatalan) {
    auto tau = solve_branch_zero(QS::one(10), 3, 10);
    EXPECT_EQ(tau.coefficient(1), 1);
    for (long e = 2; e <= 10; ++e) EXPECT_EQ(tau.coefficient(e), 0);
    auto cat = solve_branch_zero(one_minus_t_pow(1, 10), 1, 8);
    std::vector<long> expect{0, 1, 1, 2, 5, 14, 42};
    for (long e = 0; e < 7; ++e) EXPECT_EQ(cat.coefficient(e), expect[static_cast<std::size_t>(e)]);
}

TEST(Branch, MatchesLagrangeInversion) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-3, 3);
    for (unsigned k = 1; k <= 4; ++k)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> c(16);
            c[0] = 1;
            for (std::size_t i = 1; i < c.size(); ++i) c[i] = d(rng);
            QS h(c);
            auto tau = solve_branch_zero(h, k, 14);
            for (long n = 1; n <= 14; ++n) EXPECT_EQ(tau.coefficient(n), lagrange_coefficient(h, k, n)) << k << " " << n;
        }
}

TEST(Branch, ResidualsVanish) {
    for (unsigned k = 1; k <= 5; ++k) {
        QS h = one_minus_t_pow(2, 16);
        auto set = all_branches(solve_branch_zero(h, k, 14), k, h);
        ASSERT_EQ(set.branches.size(), k);
        EXPECT_GE(set.verified_order, 14);
        for (const auto& tau : set.branches) {
            auto res = branch_residual(h, tau);
            EXPECT_GT(res.valuation(), res.order());
            EXPECT_TRUE(tau.coefficient(0).is_zero());
        }
    }
}

TEST(Branch, SymmetricFunctionsAreRational) {
    QS h = one_minus_t_pow(2, 12);
    auto set = all_branches(solve_branch_zero(h, 3, 12), 3, h);
    auto sum = set.branches[0] + set.branches[1] + set.branches[2];
    auto prod = set.branches[0] * set.branches[1] * set.branches[2];
    for (long e = 0; e <= sum.order(); ++e) EXPECT_TRUE(sum.coefficient(e).is_rational());
    for (long e = 0; e <= prod.order(); ++e) {
        EXPECT_TRUE(prod.coefficient(e).is_rational());
        if (e % 3) EXPECT_TRUE(prod.coefficient(e).is_zero());
    }
}

TEST(Branch, CorruptedBranchIsRejected) {
    QS h = one_minus_t_pow(1, 10);
    auto tau = solve_branch_zero(h, 2, 10);
    auto coeffs = tau.coefficients();
    coeffs[4] += 1;
    RamifiedSeries<Rational> bad(2, 0, coeffs);
    try {
        all_branches(bad, 2, h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BranchResidualNonzero);
    }
}

TEST(Sections, CatalanFromStaircase) {
    auto sg = section_gfs(Boundary({}, {1}), std::nullopt, Rational(1), 10);
    ASSERT_EQ(sg.sections.size(), 1u);
    auto lp = lp_recursion(Boundary({}, {1}), 10).values;
    EXPECT_EQ(as_integers(sg.sections[0]), lp);
}

TEST(Sections, TennisTwoTwo) {
    auto sg = section_gfs(make_tennis(2, 2), std::nullopt, Rational(1), 5);
    std::vector<Integer> q1 = as_integers(sg.sections[1]);
    for (std::size_t q = 0; q <= 5; ++q) EXPECT_EQ(q1[q], count_lp_dp(make_tennis(2, 2), 2 * q + 2)) << q;
    // Published: 3, 22, 211, 2306, 23270, 338444. The z^4 term is 27230.
    const std::vector<long> published{3, 22, 211, 2306, 23270, 338444};
    for (std::size_t q : {0u, 1u, 2u, 3u, 5u}) EXPECT_EQ(q1[q], published[q]);
    EXPECT_EQ(q1[4], 27230);
    std::vector<Integer> q0 = as_integers(sg.sections[0]);
    EXPECT_EQ(q0[0], 1);
    EXPECT_EQ(q0[1], 6);
    EXPECT_EQ(q0[2], 53);
    EXPECT_EQ(sg.diagnostics.det_valuation, 1);
    EXPECT_TRUE(sg.diagnostics.vandermonde_leading);
}

TEST(Sections, AgreeWithRecursionSubsequences) {
    std::mt19937 rng(23);
    const std::size_t q_max = 8;
    int done = 0;
    while (done < 18) {
        Boundary b = gen::random_boundary(rng, 4);
        auto sg = section_gfs(b, std::nullopt, Rational(1), q_max);
        const std::size_t k = b.height(), r = b.prefix_length();
        auto lp = lp_recursion(b, r + k * (q_max + 1)).values;
        for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(as_integers(sg.sections[j]), subsequence(lp, r + j, k, q_max + 1)) << b << " j=" << j;
        ++done;
    }
    for (StepShape s : {StepShape{1, 1}, StepShape{1, 2}, StepShape{2, 1}}) {
        for (int trial = 0; trial < 3; ++trial) {
            Boundary b = gen::random_slope_valid(rng, s, 4);
            const std::size_t k = b.height(), r = b.prefix_length();
            for (Rational sigma : {Rational(1), Rational(-2, 3)}) {
                auto sg = section_gfs(b, s, sigma, q_max);
                auto sp = sp_recursion(b, s, r + k * (q_max + 1)).values;
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t q = 0; q <= q_max; ++q)
                        EXPECT_EQ(sg.sections[j][q], sp[r + j + k * q].evaluate(sigma)) << b << " j=" << j << " q=" << q;
            }
        }
    }
}

TEST(Sections, AssembleReproducesCounts) {
    for (const Boundary& b : {make_tennis(2, 2), Boundary({2, 3}, {1, 1, 3}), make_arithmetic(2, 1), Boundary({}, {1})}) {
        auto sg = section_gfs(b, std::nullopt, Rational(1), 6);
        auto full = assemble_ogf(sg);
        auto lp = lp_recursion(b, full.order()).values;
        EXPECT_EQ(as_integers(full), lp) << b;
    }
}

TEST(Sections, ArithmeticUnderSubstitution) {
    // k = 1: sum LP_n z^n = 1/(1-t)^c with z = t(1-t)^d.
    for (Term c = 1; c <= 3; ++c)
        for (Term d = 1; d <= 3; ++d) {
            auto sg = section_gfs(make_arithmetic(c, d), std::nullopt, Rational(1), 8);
            auto full = assemble_ogf(sg).truncated(8);
            QS z = series_shift_up(one_minus_t_pow(d, 9), 1).truncated(9);
            QS lhs = series_compose(full, z).truncated(8);
            EXPECT_EQ(lhs, one_minus_t_pow(-c, 8)) << c << " " << d;
        }
}

TEST(Sections, DeterminantLeadingTermIsVandermonde) {
    for (unsigned k = 1; k <= 5; ++k) {
        Boundary b({1}, std::vector<Term>(k, 2));
        auto sg = section_gfs(b, std::nullopt, Rational(1), 2);
        EXPECT_EQ(sg.diagnostics.det_valuation, static_cast<long>(k * (k - 1) / 2));
        std::vector<std::vector<CycloNum>> v(k, std::vector<CycloNum>(k));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) v[i][j] = CycloNum::root_of_unity(k, static_cast<long>(i * j));
        EXPECT_EQ(sg.diagnostics.det_leading, gen::leibniz_det(v)) << k;
    }
}

TEST(Tennis, ProductMatchesDp) {
    for (auto [k, l] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const std::size_t q_max = 8;
        auto q0 = tennis_q0_product(k, l, q_max);
        Boundary b = make_tennis(k, l);
        auto sg = section_gfs(b, std::nullopt, Rational(1), q_max);
        for (std::size_t q = 0; q <= q_max; ++q) {
            Integer dp = count_lp_dp(b, k * q + 1);
            EXPECT_EQ(q0[q], dp) << k << "," << l << " q=" << q;
            for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(sg.sections[j][q], count_lp_dp(b, k * q + j + 1)) << k << "," << l;
        }
    }
}

TEST(Tennis, CatalanProduct) {
    EXPECT_EQ(tennis_catalan_product(1, 6), tennis_q0_product(1, 1, 6));
    auto c = tennis_catalan_product(1, 4);
    std::vector<long> catalan_shift{1, 2, 5, 14, 42};
    for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(c[i], catalan_shift[i]);
    for (unsigned k = 2; k <= 3; ++k) EXPECT_EQ(tennis_catalan_product(k, 8), tennis_q0_product(k, k, 8)) << k;
}

TEST(Alternant, Examples) {
    auto two = alternant_check({Rational(1, 2), Rational(1, 3)});
    EXPECT_EQ(two.determinant, Rational(1, 2));
    EXPECT_TRUE(two.equal);
    auto one = alternant_check({Rational(1, 2)});
    EXPECT_EQ(one.determinant, 2);
    EXPECT_TRUE(one.equal);
    EXPECT_THROW(alternant_check({Rational(1)}), Error);
    EXPECT_THROW(alternant_check({Rational(2), Rational(2)}), Error);
}

TEST(Alternant, RandomTuplesAgainstPermutationExpansion) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), kd(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = static_cast<std::size_t>(kd(rng));
        std::vector<Rational> t;
        while (t.size() < k) {
            Rational x(num(rng), den(rng));
            x.canonicalize();
            if (x == 1 || std::find(t.begin(), t.end(), x) != t.end()) continue;
            t.push_back(x);
        }
        auto r = alternant_check(t);
        EXPECT_TRUE(r.equal);
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i) {
            m[i][0] = Rational(1) / (1 - t[i]);
            for (std::size_t e = 0; e + 1 < k; ++e) m[i][0] *= t[i];
            Rational p = 1;
            for (std::size_t j = 1; j < k; ++j, p *= t[i]) m[i][j] = p;
        }
        EXPECT_EQ(gen::leibniz_det(m), r.determinant);
    }
}
