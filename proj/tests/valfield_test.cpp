#include <gtest/gtest.h>

#include "nevan/valfield.hpp"
#include "test_support.hpp"

using namespace nevan;
using namespace nevan::testing;

TEST(LogAbs, PadicExamples) {
    EXPECT_EQ(Q5().logabs(Scalar(Rational(5))), LogValue(Rational(-1)));
    EXPECT_EQ(Q5().logabs(Scalar(R(1, 25))), LogValue(Rational(2)));
    EXPECT_TRUE(Q3().logabs(Scalar(Rational(0))).is_neg_inf());
    EXPECT_EQ(Q5().logabs(Scalar(R(-7, 3))), LogValue(Rational(0)));
}

TEST(LogAbs, TadicExamples) {
    Field f = T2();
    EXPECT_EQ(f.logabs(f.t()), LogValue(Rational(-1)));
    EXPECT_EQ(f.logabs(f.one() / (f.t() * f.t())), LogValue(Rational(2)));
    EXPECT_EQ(f.logabs(f.t() + f.one()), LogValue(Rational(0)));
    EXPECT_TRUE(f.logabs(f.zero()).is_neg_inf());
}

TEST(LogAbs, RejectsForeignAndNonReducedElements) {
    Field f = T3();
    EXPECT_THROW(f.logabs(Scalar(Rational(3))), InputError);
    EXPECT_THROW(Q5().logabs(f.t()), InputError);
    // (t^2)/(t) stored without reduction
    TadicElem raw = TadicElem::raw(FpPoly::monomial(3, 2), FpPoly::monomial(3, 1));
    EXPECT_THROW(f.logabs(Scalar(raw)), InputError);
    // wrong prime
    EXPECT_THROW(f.logabs(T2().t()), InputError);
}

TEST(FieldOps, Examples) {
    EXPECT_EQ(Scalar(R(1, 2)) + Scalar(R(1, 3)), Scalar(R(5, 6)));
    Field f = T2();
    EXPECT_TRUE((f.t() * (f.one() / f.t())).is_one());
    EXPECT_TRUE((f.one() + f.one()).is_zero());
    EXPECT_EQ(f.characteristic(), 2u);
    EXPECT_EQ(Q5().characteristic(), 0u);
}

TEST(FieldOps, Errors) {
    EXPECT_THROW(Scalar(Rational(0)).inv(), DivisionByZero);
    EXPECT_THROW(T2().zero().inv(), DivisionByZero);
    EXPECT_THROW(Scalar(Rational(1)) + T2().one(), InputError);
    EXPECT_THROW(T2().t() * T3().t(), InputError);
    EXPECT_THROW(Field::padic(4), InputError);
    EXPECT_THROW(Field::tadic(1), InputError);
}

TEST(FieldOps, FromIntegerReducesModP) {
    EXPECT_TRUE(T3().from_int(6).is_zero());
    EXPECT_EQ(T3().from_int(-1), T3().from_int(2));
    EXPECT_EQ(T2().from_rational(R(1, 3)), T2().one());
    EXPECT_THROW(T3().from_rational(R(1, 3)), DivisionByZero);
}

TEST(FieldOps, PthPowerRoot) {
    Field f = T2();
    Scalar t = f.t();
    auto r = f.pth_power_root(t * t * t * t / (t * t + f.one()), 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, t * t / (t + f.one()));
    EXPECT_FALSE(f.pth_power_root(t, 2).has_value());
}

class ValuationProperties : public ::testing::TestWithParam<Field> {};

TEST_P(ValuationProperties, MultiplicativeAndUltrametric) {
    const Field f = GetParam();
    std::mt19937_64 rng(1234 + f.prime() * 7 + static_cast<int>(f.kind()));
    for (int i = 0; i < 1000; ++i) {
        Scalar x = f.random_element(rng, 3), y = f.random_element(rng, 3);
        LogValue lx = f.logabs(x), ly = f.logabs(y);
        ASSERT_EQ(f.logabs(x * y), lx + ly);
        LogValue ls = f.logabs(x + y);
        ASSERT_LE(ls, max(lx, ly));
        if (lx != ly) ASSERT_EQ(ls, max(lx, ly));
        ASSERT_EQ(f.logabs(x).is_neg_inf(), x.is_zero());
    }
}

TEST_P(ValuationProperties, CanonicalFormIsIdempotent) {
    const Field f = GetParam();
    std::mt19937_64 rng(99 + f.prime());
    for (int i = 0; i < 200; ++i) {
        Scalar x = f.random_element(rng, 3);
        ASSERT_TRUE(f.contains(x));
        if (x.is_tadic()) {
            Scalar again(TadicElem(x.tadic().num(), x.tadic().den()));
            ASSERT_EQ(again, x);
        } else {
            Rational q = x.rational();
            q.canonicalize();
            ASSERT_EQ(Scalar(q), x);
        }
        ASSERT_EQ(x * f.one(), x);
    }
}

INSTANTIATE_TEST_SUITE_P(AllFields, ValuationProperties, ::testing::ValuesIn(all_fields()),
                         [](const ::testing::TestParamInfo<Field>& info) {
                             return std::string(info.param.kind() == FieldKind::padic ? "padic" : "tadic") +
                                    std::to_string(info.param.prime());
                         });
