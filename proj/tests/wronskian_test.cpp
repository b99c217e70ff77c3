#include <gtest/gtest.h>

#include "nevan/wronskian.hpp"
#include "test_support.hpp"

using namespace nevan;
using namespace nevan::testing;

namespace {

Variety conic(const Field& f) { return Variety(f, 2, {X("x0*x2 - x1^2", f, 2)}, 1); }

}  // namespace

TEST(RankF, Examples) {
    const Field f = Q5();
    EXPECT_EQ(rank_f(ProjectiveMap({P("z", f), P("1", f)})), 1u);
    EXPECT_EQ(rank_f(ProjectiveMap({P("z^2", f), P("z", f), P("1", f)})), 1u);
    EXPECT_EQ(rank_f(ProjectiveMap({PW("z*w", f), PW("z", f), PW("w", f), PW("1", f)})), 2u);
    // characteristic 2: D(z^2) = 0
    EXPECT_EQ(rank_f(ProjectiveMap({P("z^2", T2()), P("1", T2())})), 0u);
}

TEST(RankF, InvariantUnderCommonFactor) {
    std::mt19937_64 rng(5);
    for (const Field& f : {Q3(), T2()}) {
        for (int i = 0; i < 15; ++i) {
            std::vector<Polynomial> c;
            for (int j = 0; j < 3; ++j) c.push_back(random_nonzero_poly(rng, f, 2, 3, 3));
            ProjectiveMap base = ProjectiveMap::reduce(c);
            Polynomial h = random_nonzero_poly(rng, f, 2, 2, 2);
            std::vector<Polynomial> scaled;
            for (const auto& x : base.coords()) scaled.push_back(x * h);
            ASSERT_EQ(rank_f(ProjectiveMap::reduce(scaled)), rank_f(base));
        }
    }
}

TEST(Nondegeneracy, Examples) {
    const Field f = Q5();
    ProjectiveMap ver({P("z^2", f), P("z", f), P("1", f)});
    auto r = nondegeneracy_check(ver, conic(f), 1);
    EXPECT_TRUE(r.nondegenerate);
    ProjectiveMap diag({P("z", f), P("z", f), P("1", f)});
    r = nondegeneracy_check(diag, Variety::projective_space(f, 2), 1);
    EXPECT_FALSE(r.nondegenerate);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(evaluate(*r.witness, diag).is_zero());
    EXPECT_TRUE(nondegeneracy_check(ProjectiveMap({P("z", f), P("1", f)}), Variety::projective_space(f, 1), 2).nondegenerate);
    // on the conic at d = 2, x0*x2 and x1^2 are the same class, so the map stays non-degenerate
    EXPECT_TRUE(nondegeneracy_check(ver, conic(f), 2).nondegenerate);
}

TEST(IndexS, Examples) {
    const Field f = T2();
    Variety p1 = Variety::projective_space(f, 1);
    EXPECT_EQ(index_s(ProjectiveMap({P("z^2", f), P("1", f)}), p1, 1), 2u);
    EXPECT_EQ(index_s(ProjectiveMap({P("z", f), P("1", f)}), p1, 1), 1u);
    EXPECT_FALSE(index_s(ProjectiveMap({P("z", Q5()), P("1", Q5())}), Variety::projective_space(Q5(), 1), 1).has_value());
    EXPECT_EQ(index_s(ProjectiveMap({P("z^4 + t*z", f), P("1", f)}), p1, 1), 1u);
    EXPECT_EQ(index_s(ProjectiveMap({P("z^4", f), P("1", f)}), p1, 1), 3u);
    EXPECT_EQ(index_s(ProjectiveMap({P("z^3", T3()), P("1", T3())}), Variety::projective_space(T3(), 1), 1), 2u);
    EXPECT_THROW(index_s(ProjectiveMap({P("z", f), P("z", f), P("1", f)}), Variety::projective_space(f, 2), 1),
                 PreconditionError);
}

TEST(Kappa0, Examples) {
    EXPECT_EQ(kappa0(3, 2, std::nullopt, 0), 1u);  // P^2, d = 1, k = n
    EXPECT_EQ(kappa0(3, 1, 2u, 2), 4u);
    EXPECT_EQ(kappa0(3, 1, std::nullopt, 0), 2u);
    EXPECT_THROW(kappa0(3, 3, std::nullopt, 0), InputError);
    EXPECT_THROW(kappa0(0, 0, std::nullopt, 0), InputError);
    EXPECT_THROW(kappa0(3, 1, std::nullopt, 2), InputError);
}

TEST(FindWronskian, Examples) {
    const Field f = Q5();
    WronskianCertificate c = find_wronskian(ProjectiveMap({P("z", f), P("1", f)}), Variety::projective_space(f, 1), 1, 1);
    EXPECT_EQ(c.gammas, (std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}}));
    EXPECT_EQ(c.W, P("-1", f));
    EXPECT_EQ(c.gamma_sum, 1u);

    c = find_wronskian(ProjectiveMap({P("z^2", f), P("z", f), P("1", f)}), Variety::projective_space(f, 2), 1, 2);
    EXPECT_EQ(c.gammas, (std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}, MultiIndex{2}}));
    EXPECT_TRUE(c.W.is_constant());
    EXPECT_FALSE(c.W.is_zero());

    const Field g = T2();
    ProjectiveMap sq({P("z^2", g), P("1", g)});
    Variety p1 = Variety::projective_space(g, 1);
    std::uint64_t k0 = kappa0(2, rank_f(sq), index_s(sq, p1, 1), 2);
    EXPECT_EQ(k0, 4u);
    c = find_wronskian(sq, p1, 1, k0);
    EXPECT_EQ(c.gammas, (std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{2}}));
    EXPECT_EQ(c.W, P("1", g));
    EXPECT_THROW(find_wronskian(sq, p1, 1, 1), ConsistencyError);
}

TEST(FindWronskian, CertificatesRecomputeAndAreGreedyMinimal) {
    std::mt19937_64 rng(13);
    for (const Field& f : {Q3(), T2(), T3()}) {
        for (int i = 0; i < 8; ++i) {
            std::size_t m = 1 + i % 2;
            std::vector<Polynomial> c;
            for (int j = 0; j < 3; ++j) c.push_back(random_nonzero_poly(rng, f, m, 4, 3));
            ProjectiveMap F = ProjectiveMap::reduce(c);
            Variety p2 = Variety::projective_space(f, 2);
            if (!nondegeneracy_check(F, p2, 1).nondegenerate) continue;
            std::uint64_t k0 = kappa0(3, rank_f(F), index_s(F, p2, 1), f.characteristic());
            WronskianCertificate cert = find_wronskian(F, p2, 1, k0);
            auto comps = basis_composites(F, p2, 1);
            ASSERT_EQ(wronskian_determinant(comps, cert.gammas), cert.W);
            ASSERT_FALSE(cert.W.is_zero());
            for (std::size_t j = 0; j < cert.gammas.size(); ++j) {
                ASSERT_LE(cert.gammas[j].total(), k0);
                if (j) {
                    ASSERT_LE(cert.gammas[j - 1].total(), cert.gammas[j].total());
                }
            }
            // composite rank bounds rank f
            ASSERT_GE(composite_first_order_rank(comps), rank_f(F));
        }
    }
}
