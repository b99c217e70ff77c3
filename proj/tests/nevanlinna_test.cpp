#include <gtest/gtest.h>

#include "nevan/nevanlinna.hpp"
#include "test_support.hpp"

using namespace nevan;
using namespace nevan::testing;

TEST(GaussNorm, Examples) {
    const Field f = Q5();
    EXPECT_EQ(gauss_norm(P("z^2-5*z", f), R(0)), LogValue(R(0)));
    EXPECT_EQ(gauss_norm(P("z^2-5*z", f), R(-2)), LogValue(R(-3)));
    for (long rho : {-4, 0, 7}) EXPECT_EQ(gauss_norm(P("25", f), R(rho)), LogValue(R(-2)));
    EXPECT_TRUE(gauss_norm(Polynomial(f, 1), R(1)).is_neg_inf());
}

TEST(CountN, Examples) {
    const Field f = Q5();
    Polynomial g = P("z^2-5*z", f);
    EXPECT_EQ(count_n(g, R(0)), 2);
    EXPECT_EQ(count_n(g, R(-2)), 1);
    for (long rho : {-3, 0, 5}) EXPECT_EQ(count_n(P("z^4", f), R(rho)), 4);
    EXPECT_EQ(count_n_at_zero(P("z^4", f)), 4);
    EXPECT_THROW(count_n(Polynomial(f, 1), R(0)), InputError);
}

TEST(CountN, BigN) {
    const Field f = Q5();
    Polynomial g = P("z^2-5*z", f);
    EXPECT_EQ(count_N(g, R(0)), R(1));
    EXPECT_EQ(count_N(g, R(2)), R(5));
    // root oracle: roots 0 and 5
    FactoredPoly fp{f.one(), {{f.zero(), 1}, {f.from_int(5), 1}}};
    EXPECT_EQ(clamp_oracle(fp, f, R(2), 1000), R(5));
    EXPECT_EQ(count_N(P("7", f), R(3)), R(0));
    EXPECT_THROW(count_N(Polynomial(f, 1), R(0)), InputError);
}

TEST(CountNRational, Examples) {
    const Field f = Q5();
    auto c = count_N_rational(RationalFunction(P("1", f), P("z", f)), R(1));
    EXPECT_EQ(c.zeros, R(0));
    EXPECT_EQ(c.poles, R(1));
    c = count_N_rational(RationalFunction(P("z-5", f), P("z", f)), R(0));
    EXPECT_EQ(c.zeros, R(1));
    EXPECT_EQ(c.poles, R(0));
    c = count_N_rational(RationalFunction(P("3", f)), R(4));
    EXPECT_EQ(c.zeros, R(0));
    EXPECT_EQ(c.poles, R(0));
}

TEST(PoissonJensen, Examples) {
    const Field f = Q5();
    std::vector<Rational> grid{R(-3), R(-1), R(0), R(1, 2), R(2), R(9)};
    EXPECT_EQ(poisson_jensen_constant(RationalFunction(P("z^2-5*z", f)), grid), R(1));
    EXPECT_EQ(poisson_jensen_constant(RationalFunction(P("25", f)), grid), R(2));
    EXPECT_EQ(poisson_jensen_constant(RationalFunction(P("z", f)), grid), R(0));
}

TEST(Proximity, Examples) {
    const Field f = Q5();
    RationalFunction z(P("z", f));
    EXPECT_EQ(proximity_m(z, std::nullopt, R(2)), R(2));
    EXPECT_EQ(proximity_m(z, std::nullopt, R(-3)), R(0));
    EXPECT_EQ(proximity_m(z, f.zero(), R(2)), R(0));
    EXPECT_EQ(proximity_m(z, f.zero(), R(-2)), R(2));
    EXPECT_THROW(proximity_m(RationalFunction(P("3", f)), f.from_int(3), R(0)), InputError);
}

TEST(Characteristic, Examples) {
    const Field f = Q5();
    EXPECT_EQ(characteristic_T(RationalFunction(P("z^2-5*z", f)), R(2)), R(4));
    EXPECT_EQ(characteristic_T(RationalFunction(P("1", f), P("z", f)), R(3)), R(3));
}

class NevanlinnaProperties : public ::testing::TestWithParam<Field> {};

TEST_P(NevanlinnaProperties, GaussMultiplicativity) {
    const Field f = GetParam();
    std::mt19937_64 rng(100 + f.prime());
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
    for (int i = 0; i < 500; ++i) {
        std::size_t m = 1 + i % 2;
        Polynomial a = random_nonzero_poly(rng, f, m, 4, 4, 3), b = random_nonzero_poly(rng, f, m, 4, 4, 3);
        Rational rho = R(num(rng), den(rng));
        ASSERT_EQ(gauss_norm(a * b, rho), gauss_norm(a, rho) + gauss_norm(b, rho));
    }
}

TEST_P(NevanlinnaProperties, LogarithmicDerivativeBound) {
    const Field f = GetParam();
    std::mt19937_64 rng(200 + f.prime());
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_nonzero_poly(rng, f, 2, 6, 5, 3);
        MultiIndex g{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)};
        Rational rho = R(num(rng), den(rng));
        LogValue bound = gauss_norm(a, rho) - LogValue(Rational(g.total()) * rho);
        ASSERT_LE(gauss_norm(hasse_derivative(a, g), rho), bound);
        ASSERT_LE(gauss_norm(partial_derivative(a, g), rho), bound);
    }
}

TEST_P(NevanlinnaProperties, PoissonJensenConstancy) {
    const Field f = GetParam();
    std::mt19937_64 rng(300 + f.prime());
    std::vector<Rational> grid;
    for (int k = -10; k <= 10; ++k) grid.push_back(R(k, 3));
    for (int i = 0; i < 60; ++i) {
        RationalFunction r(random_nonzero_poly(rng, f, 1 + i % 2, 5, 4, 3), random_nonzero_poly(rng, f, 1 + i % 2, 5, 4, 3));
        ASSERT_NO_THROW(poisson_jensen_constant(r, grid)) << r.str();
    }
}

TEST_P(NevanlinnaProperties, RootOracleAndConvexity) {
    const Field f = GetParam();
    std::mt19937_64 rng(400 + f.prime());
    for (int i = 0; i < 100; ++i) {
        FactoredPoly fp = random_factored(rng, f, 4, 3);
        Polynomial g = fp.expand(f);
        Rational prev_slope;
        bool first = true;
        for (int k = -12; k <= 12; ++k) {
            Rational rho = R(k, 2);
            ASSERT_EQ(count_N(g, rho), clamp_oracle(fp, f, rho, ~0ul)) << g.str() << " rho=" << to_string(rho);
            // slope on [rho, rho + 1/2] equals n at interior points
            Rational slope = (count_N(g, rho + R(1, 2)) - count_N(g, rho)) * 2;
            ASSERT_EQ(slope, Rational(count_n(g, rho + R(1, 4))));
            if (!first) {
                ASSERT_GE(slope, prev_slope);
            }
            prev_slope = slope;
            first = false;
        }
    }
}

TEST_P(NevanlinnaProperties, FirstMainTheoremForFunctions) {
    // T_f(r) = N_{f-a}(0, r) + m_f(a, r) + O(1): the difference is bounded, and
    // constant once rho is past every Newton-polygon breakpoint.
    const Field f = GetParam();
    std::mt19937_64 rng(500 + f.prime());
    for (int i = 0; i < 40; ++i) {
        RationalFunction r(random_nonzero_poly(rng, f, 1, 4, 3, 2), random_nonzero_poly(rng, f, 1, 4, 3, 2));
        Scalar a = f.random_element(rng, 2);
        RationalFunction shifted = r - RationalFunction(Polynomial::constant(f, 1, a));
        if (shifted.is_zero()) continue;
        auto diff = [&](const Rational& rho) -> Rational {
            return characteristic_T(r, rho) - count_N_rational(shifted, rho).zeros - proximity_m(r, a, rho);
        };
        std::vector<const Polynomial*> polys{&r.num(), &r.den(), &shifted.num(), &shifted.den()};
        std::vector<Rational> br = merged_breakpoints(polys);
        // past the breakpoints and past where log|f - a| crosses 0 (coefficient heights are small)
        Rational beyond = (br.empty() ? Rational(0) : br.back()) + 30;
        const Rational c = diff(beyond);
        for (int k = 0; k <= 6; ++k) ASSERT_EQ(diff(beyond + R(k, 2)), c) << r.str();
        for (int k = -8; k <= 8; ++k) {
            Rational d = diff(R(k, 2)) - c;
            Rational bound = 40;
            ASSERT_LE(Rational(abs(d)), bound) << r.str();
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllFields, NevanlinnaProperties, ::testing::ValuesIn(all_fields()),
                         [](const ::testing::TestParamInfo<Field>& info) {
                             return std::string(info.param.kind() == FieldKind::padic ? "padic" : "tadic") +
                                    std::to_string(info.param.prime());
                         });
