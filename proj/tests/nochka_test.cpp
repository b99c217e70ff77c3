#include <gtest/gtest.h>

#include "nevan/lp.hpp"
#include "nevan/nochka.hpp"
#include "nevan/projgeom.hpp"
#include "test_support.hpp"

using namespace nevan;
using namespace nevan::testing;

TEST(ExactLp, SmallPrograms) {
    using S = LinearConstraint::Sense;
    // min -x - y s.t. x + 2y <= 4, 3x + y <= 6  -> vertex (8/5, 6/5)
    LinearProgram lp;
    lp.nvars = 2;
    lp.add({R(1), R(2)}, S::le, R(4));
    lp.add({R(3), R(1)}, S::le, R(6));
    auto x = lexicographic_minimize(lp, {{R(-1), R(-1)}});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], R(8, 5));
    EXPECT_EQ((*x)[1], R(6, 5));
    // infeasible
    LinearProgram bad;
    bad.nvars = 1;
    bad.add({R(1)}, S::ge, R(2));
    bad.add({R(1)}, S::le, R(1));
    EXPECT_FALSE(lexicographic_minimize(bad, {{R(1)}}).has_value());
    // lexicographic: min x + y = 1 over x, y >= 0, then min x  -> (0, 1)
    LinearProgram lex;
    lex.nvars = 2;
    lex.add({R(1), R(1)}, S::eq, R(1));
    x = lexicographic_minimize(lex, {{R(1), R(1)}, {R(1), R(0)}});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], R(0));
    EXPECT_EQ((*x)[1], R(1));
    // unbounded
    LinearProgram unb;
    unb.nvars = 1;
    EXPECT_THROW(lexicographic_minimize(unb, {{R(-1)}}), ConsistencyError);
}

TEST(Weights, GeneralPosition) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t q = n + 2; q <= 7; ++q) {
            NochkaWeights w = compute_weights(q, n, n);
            EXPECT_EQ(w.omega_tilde, R(1));
            for (const auto& o : w.omega) EXPECT_EQ(o, R(1));
            EXPECT_TRUE(weight_violations(w).empty());
        }
}

TEST(Weights, PinchedCase) {
    NochkaWeights w = compute_weights(6, 2, 1);
    EXPECT_EQ(w.omega_tilde, R(1, 2));
    Rational sum = 0;
    for (const auto& o : w.omega) {
        EXPECT_EQ(o, R(1, 2));
        sum += o;
    }
    EXPECT_EQ(sum, R(3));
}

TEST(Weights, CorpusInvariantsAndDeterminism) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t N = n; N <= 4; ++N)
            for (std::size_t q = 2 * N - n + 2; q <= 10; ++q) {
                NochkaWeights w = compute_weights(q, N, n);
                auto bad = weight_violations(w);
                ASSERT_TRUE(bad.empty()) << q << " " << N << " " << n << ": " << bad.front();
                NochkaWeights again = compute_weights(q, N, n);
                ASSERT_EQ(w.omega, again.omega);
            }
}

TEST(Weights, Preconditions) {
    EXPECT_THROW(compute_weights(4, 2, 1), PreconditionError);  // q = 2N - n + 1
    EXPECT_THROW(compute_weights(6, 1, 2), PreconditionError);  // N < n
}

TEST(WeightViolations, DetectsEachInvariant) {
    NochkaWeights w = compute_weights(6, 2, 1);
    NochkaWeights zero = w;
    zero.omega[0] = 0;
    EXPECT_FALSE(weight_violations(zero).empty());
    NochkaWeights big = w;
    big.omega_tilde = R(1);
    EXPECT_FALSE(weight_violations(big).empty());
}

namespace {

// distinct points of P^1: any two classes are independent
SubsetRank points_rank(const Field& f, const std::vector<Hypersurface>& pts) {
    auto v = std::make_shared<Variety>(Variety::projective_space(f, 1));
    return [v, pts](const std::vector<std::size_t>& idx) {
        std::vector<const Hypersurface*> rows;
        for (auto i : idx) rows.push_back(&pts[i]);
        return class_rank(v->hilbert(1), rows);
    };
}

}  // namespace

TEST(SelectSubset, Examples) {
    const Field f = Q5();
    std::vector<Hypersurface> pts;
    for (int a = 0; a < 6; ++a) pts.emplace_back(X("x0 - " + std::to_string(a) + "*x1", f, 1));
    auto rk = points_rank(f, pts);

    NochkaWeights half = compute_weights(6, 2, 1);
    std::vector<Rational> E{R(4), R(2), R(1), R(1), R(1), R(1)};
    SubsetSelection s = select_subset(half, E, {0, 1, 2}, rk);
    EXPECT_EQ(s.subset, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(s.used_fallback);

    std::vector<Rational> ones(6, R(1));
    s = select_subset(half, ones, {0, 1, 2}, rk);
    EXPECT_EQ(s.subset.size(), 2u);

    NochkaWeights gp = compute_weights(4, 1, 1);
    std::vector<Rational> E2{R(3), R(7, 2), R(1), R(1)};
    s = select_subset(gp, E2, {0, 1}, rk);
    EXPECT_EQ(s.subset, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(weighted_product_le(gp, E2, {0, 1}, {0, 1}));
    EXPECT_TRUE(weighted_product_le(gp, E2, {0, 1}, {1, 0}));

    std::vector<Rational> small{R(1, 2), R(2), R(1), R(1), R(1), R(1)};
    EXPECT_THROW(select_subset(half, small, {0, 1, 2}, rk), InputError);
}

TEST(SelectSubset, RandomExponentVectors) {
    const Field f = Q5();
    std::vector<Hypersurface> pts;
    for (int a = 0; a < 8; ++a) pts.emplace_back(X("x0 - " + std::to_string(a) + "*x1", f, 1));
    auto rk = points_rank(f, pts);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(1, 60), den(1, 5);
    for (std::size_t N : {1u, 2u, 3u}) {
        NochkaWeights w = compute_weights(8, N, 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rational> E;
            for (int i = 0; i < 8; ++i) {
                Rational e = R(num(rng), den(rng));
                E.push_back(e < 1 ? Rational(1) : e);
            }
            std::vector<std::size_t> R0;
            for (std::size_t i = 0; i <= N; ++i) R0.push_back((trial + 3 * i) % 8);
            std::sort(R0.begin(), R0.end());
            R0.erase(std::unique(R0.begin(), R0.end()), R0.end());
            if (R0.size() != N + 1) continue;
            SubsetSelection s = select_subset(w, E, R0, rk);
            ASSERT_EQ(s.subset.size(), 2u);
            ASSERT_EQ(rk(s.subset), 2u);
            ASSERT_TRUE(weighted_product_le(w, E, R0, s.subset));
        }
    }
}
