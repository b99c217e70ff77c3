#include <gtest/gtest.h>

#include <set>

#include "nevan/projgeom.hpp"
#include "test_support.hpp"

using namespace nevan;
using namespace nevan::testing;

namespace {

Hypersurface HS(const std::string& s, const Field& f, std::size_t M) { return Hypersurface(X(s, f, M)); }

Variety conic(const Field& f) { return Variety(f, 2, {X("x0*x2 - x1^2", f, 2)}, 1); }

Variety twisted_cubic(const Field& f) {
    return Variety(f, 3, {X("x0*x2 - x1^2", f, 3), X("x1*x3 - x2^2", f, 3), X("x0*x3 - x1*x2", f, 3)}, 1);
}

// Rank oracle: dim of the image of degree-d forms pulled back along a
// parametrization (s, t) -> param(s, t), independent of the ideal generators.
std::size_t pullback_rank(const Field& f, std::size_t M, const std::vector<Polynomial>& param, unsigned d) {
    std::set<MultiIndex, GrlexLess> support;
    std::vector<Polynomial> images;
    for (const auto& e : indices_of_degree(M + 1, d)) {
        Polynomial img = Polynomial::monomial(f, e, f.one()).compose(param);
        for (const auto& [m, c] : img.terms()) support.insert(m);
        images.push_back(img);
    }
    Matrix m(f, 0, support.size());
    for (const auto& img : images) {
        Vector row;
        for (const auto& s : support) row.push_back(img.coefficient(s));
        m.append_row(row);
    }
    return rank(m);
}

}  // namespace

TEST(Linalg, RankNullspaceAndReduce) {
    const Field f = Q5();
    Matrix m = Matrix::from_rows(f, 3, {{f.from_int(1), f.from_int(2), f.from_int(3)},
                                         {f.from_int(2), f.from_int(4), f.from_int(6)},
                                         {f.from_int(0), f.from_int(1), f.from_int(1)}});
    EXPECT_EQ(rank(m), 2u);
    auto k = nullspace(m);
    ASSERT_EQ(k.size(), 1u);
    for (std::size_t i = 0; i < 3; ++i) {
        Scalar s = f.zero();
        for (std::size_t j = 0; j < 3; ++j) s = s + m(i, j) * k[0][j];
        EXPECT_TRUE(s.is_zero());
    }
    Echelon e = row_reduce(m);
    Vector r = e.reduce(m.row(1));
    for (const auto& x : r) EXPECT_TRUE(x.is_zero());
}

TEST(Linalg, PolynomialRankAndDeterminant) {
    const Field f = Q5();
    PolyMatrix a{{P("z", f), P("1", f)}, {P("1", f), P("0", f)}};
    EXPECT_EQ(poly_determinant(a), P("-1", f));
    PolyMatrix b{{P("z", f), P("z^2", f)}, {P("1", f), P("z", f)}};
    EXPECT_EQ(poly_matrix_rank(b), 1u);
    EXPECT_TRUE(poly_determinant(b).is_zero());
    std::mt19937_64 rng(3);
    EXPECT_EQ(poly_matrix_rank(b, &rng), 1u);
    PolyMatrix c{{P("z", f), P("z+1", f), P("3", f)}, {P("z^2", f), P("1", f), P("z", f)}, {P("1", f), P("z", f), P("z^3", f)}};
    // cofactor expansion oracle
    Polynomial det = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) - c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
                     c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    EXPECT_EQ(poly_determinant(c), det);
    EXPECT_EQ(poly_matrix_rank(c, &rng), 3u);
}

TEST(Evaluate, Examples) {
    const Field f = Q5();
    ProjectiveMap veronese({P("z^2", f), P("z", f), P("1", f)});
    EXPECT_TRUE(evaluate(HS("x0*x2 - x1^2", f, 2), veronese).is_zero());
    ProjectiveMap line({P("z", f), P("1", f)});
    EXPECT_EQ(evaluate(HS("x0", f, 1), line), P("z", f));
    EXPECT_EQ(evaluate(HS("x0 - 5*x1", f, 1), line), P("z-5", f));
    EXPECT_THROW(evaluate(HS("x0", f, 2), line), InputError);
}

TEST(ProjectiveMapTest, ReducedRepresentation) {
    const Field f = Q5();
    EXPECT_THROW(ProjectiveMap({P("z", f), P("z^2", f)}), InputError);
    ProjectiveMap r = ProjectiveMap::reduce({P("z", f), P("z^2", f)});
    EXPECT_EQ(r.coords()[0], P("1", f));
    EXPECT_EQ(r.coords()[1], P("z", f));
    EXPECT_THROW(ProjectiveMap({P("0", f), P("0", f)}), InputError);
    EXPECT_TRUE(ProjectiveMap({P("2", f), P("3", f)}).is_constant());
    EXPECT_THROW(ProjectiveMap({P("z", f), P("z", f), P("1", f)}).require_in(conic(f)), InputError);
    EXPECT_NO_THROW(ProjectiveMap({P("z^2", f), P("z", f), P("1", f)}).require_in(conic(f)));
}

TEST(Hilbert, Examples) {
    const Field f = Q5();
    EXPECT_EQ(hilbert_function(conic(f), 3), 7u);
    EXPECT_EQ(hilbert_function(Variety(f, 1, {X("x0", f, 1)}, 0), 1), 1u);
    EXPECT_EQ(hilbert_function(Variety::projective_space(f, 2), 1), 3u);
    EXPECT_THROW(hilbert_function(conic(f), 0), InputError);
    EXPECT_THROW(Variety(f, 2, {X("x0 + x1^2", f, 2)}, 1), InputError);
}

TEST(Hilbert, ProjectiveSpaceClosedForm) {
    for (const Field& f : {Q5(), T2()})
        for (std::size_t M = 1; M <= 4; ++M)
            for (unsigned d = 1; d <= 6; ++d) {
                Integer expect;
                mpz_bin_uiui(expect.get_mpz_t(), M + d, d);
                ASSERT_EQ(hilbert_function(Variety::projective_space(f, M), d), expect.get_ui()) << M << " " << d;
            }
}

TEST(Hilbert, ConicAndTwistedCubicAgainstRankOracle) {
    for (const Field& f : {Q3(), T3()}) {
        std::vector<Polynomial> conic_param{PW("z^2", f), PW("z*w", f), PW("w^2", f)};
        std::vector<Polynomial> cubic_param{PW("z^3", f), PW("z^2*w", f), PW("z*w^2", f), PW("w^3", f)};
        for (unsigned d = 1; d <= 6; ++d) {
            ASSERT_EQ(hilbert_function(conic(f), d), 2 * d + 1);
            ASSERT_EQ(hilbert_function(conic(f), d), pullback_rank(f, 2, conic_param, d));
            ASSERT_EQ(hilbert_function(twisted_cubic(f), d), pullback_rank(f, 3, cubic_param, d));
            ASSERT_EQ(hilbert_function(twisted_cubic(f), d), 3 * d + 1);
        }
        EXPECT_FALSE(conic(f).dimension_warning().has_value());
        EXPECT_FALSE(twisted_cubic(f).dimension_warning().has_value());
        EXPECT_TRUE(Variety(f, 2, {X("x0*x2 - x1^2", f, 2)}, 2).dimension_warning().has_value());
    }
}

TEST(Hilbert, ClassesModuloTheIdeal) {
    const Field f = Q5();
    Variety v = conic(f);
    const HilbertData& h = v.hilbert(2);
    // x0*x2 and x1^2 agree on the conic
    EXPECT_EQ(h.class_of(X("x0*x2", f, 2)), h.class_of(X("x1^2", f, 2)));
    Hypersurface a = HS("x0*x2", f, 2), b = HS("x1^2", f, 2), c = HS("x0^2", f, 2);
    EXPECT_EQ(class_rank(h, {&a, &b}), 1u);
    EXPECT_EQ(class_rank(h, {&a, &b, &c}), 2u);
}

TEST(Position, Examples) {
    const Field f = Q5();
    Variety p1 = Variety::projective_space(f, 1);
    std::vector<Hypersurface> pts{HS("x0", f, 1), HS("x1", f, 1), HS("x0 - x1", f, 1)};
    PositionReport r = position_check(p1, pts, 1);
    EXPECT_TRUE(r.all_certified());
    for (const auto& c : r.subsets) EXPECT_EQ(c.degree, 1u);

    std::vector<Hypersurface> twice{HS("x0", f, 1), HS("x0", f, 1), HS("x1", f, 1)};
    r = position_check(p1, twice, 1);
    EXPECT_TRUE(r.any_fails());
    ASSERT_EQ(r.subsets.front().status, PositionStatus::fails);
    const Vector& zero = r.subsets.front().common_zero;
    EXPECT_TRUE(zero[0].is_zero());
    EXPECT_FALSE(zero[1].is_zero());

    Variety p2 = Variety::projective_space(f, 2);
    std::vector<Hypersurface> lines{HS("x0", f, 2), HS("x1", f, 2), HS("x2", f, 2), HS("x0+x1+x2", f, 2),
                                    HS("x0+2*x1+3*x2", f, 2)};
    EXPECT_TRUE(position_check(p2, lines, 2).all_certified());
    EXPECT_THROW(position_check(p2, lines, 1), PreconditionError);
}

TEST(Position, NonlinearCertificatesAndMonotonicity) {
    const Field f = Q5();
    Variety v = conic(f);
    // lines meeting the conic in distinct point pairs: any two have empty common zero on V
    std::vector<Hypersurface> lines{HS("x0", f, 2), HS("x2", f, 2), HS("x0 - 3*x1 + 2*x2", f, 2),
                                    HS("x0 - 7*x1 + 12*x2", f, 2)};
    PositionReport r = position_check(v, lines, 1);
    EXPECT_TRUE(r.all_certified());
    // x0 and x1 both pass through (0:0:1) on the conic
    std::vector<Hypersurface> bad{HS("x0", f, 2), HS("x1", f, 2)};
    r = position_check(v, bad, 1, 6);
    EXPECT_EQ(r.subsets.front().status, PositionStatus::undetermined);
    for (unsigned bound = 1; bound <= 6; ++bound) {
        std::vector<const Hypersurface*> sub{&lines[0], &lines[1]};
        auto c = certify_empty_intersection(v, sub, bound);
        if (c.status != PositionStatus::certified) continue;
        for (unsigned more = bound; more <= 6; ++more)
            ASSERT_EQ(certify_empty_intersection(v, sub, more).status, PositionStatus::certified);
    }
}

TEST(MapFunctions, Examples) {
    const Field f = Q5();
    ProjectiveMap F({P("z", f), P("1", f)});
    EXPECT_EQ(map_characteristic_T(F, R(3)), R(3));
    EXPECT_EQ(map_characteristic_T(F, R(-3)), R(0));
    EXPECT_EQ(map_counting(F, HS("x0", f, 1), R(2)), R(2));
    EXPECT_EQ(map_proximity(F, HS("x0", f, 1), R(2)), R(0));
    for (long rho : {-2, 0, 3}) {
        EXPECT_EQ(map_counting(F, HS("x1", f, 1), R(rho)), R(0));
        EXPECT_EQ(map_proximity(F, HS("x1", f, 1), R(rho)), R(std::max(rho, 0L)));
    }
    EXPECT_EQ(map_counting(F, HS("x0 - 5*x1", f, 1), R(0)), R(1));
    ProjectiveMap V({P("z^2", f), P("z", f), P("1", f)});
    EXPECT_THROW(map_proximity(V, HS("x0*x2 - x1^2", f, 2), R(0)), InputError);
}

TEST(MapFunctions, FirstMainTheoremAndDegreeBound) {
    std::mt19937_64 rng(77);
    for (const Field& f : {Q3(), T2()}) {
        for (int i = 0; i < 20; ++i) {
            ProjectiveMap F = ProjectiveMap::reduce(
                {random_nonzero_poly(rng, f, 1, 3, 3), random_nonzero_poly(rng, f, 1, 3, 3), random_nonzero_poly(rng, f, 1, 3, 3)});
            Polynomial qp(f, 3);
            for (const auto& e : indices_of_degree(3, 2)) qp += Polynomial::monomial(f, e, f.random_element(rng, 2));
            if (qp.is_zero()) continue;
            Hypersurface Q(qp);
            Polynomial c = evaluate(Q, F);
            if (c.is_zero()) continue;
            long maxdeg = 0;
            for (const auto& x : F.coords()) maxdeg = std::max(maxdeg, x.total_degree());
            ASSERT_LE(c.total_degree(), static_cast<long>(Q.degree()) * maxdeg);
            std::optional<Rational> k;
            for (int r = -6; r <= 6; ++r) {
                Rational rho = R(r, 2);
                Rational v = Rational(Q.degree()) * map_characteristic_T(F, rho) - map_proximity(F, Q, rho) -
                             map_counting(F, Q, rho);
                if (!k) k = v;
                ASSERT_EQ(v, *k);
            }
        }
    }
}

TEST(NormComparisonTest, Examples) {
    const Field f = Q5();
    std::vector<Rational> grid;
    for (int k = -6; k <= 6; ++k) grid.push_back(R(k, 2));
    ProjectiveMap F({P("z", f), P("1", f)});
    Variety p1 = Variety::projective_space(f, 1);
    NormComparison c = norm_comparison(p1, {HS("x0", f, 1), HS("x1", f, 1)}, F, grid);
    EXPECT_EQ(c.observed_lower, R(0));
    EXPECT_EQ(c.upper, R(0));
    EXPECT_TRUE(c.bounded);
    c = norm_comparison(p1, {HS("5*x0", f, 1), HS("5*x1", f, 1)}, F, grid);
    EXPECT_EQ(c.observed_lower, R(-1));
    EXPECT_EQ(c.upper, R(-1));
    ProjectiveMap V({P("z^2", f), P("z", f), P("1", f)});
    c = norm_comparison(conic(f), {HS("x0", f, 2), HS("x2", f, 2)}, V, grid);
    EXPECT_EQ(c.observed_lower, R(0));
    EXPECT_EQ(c.upper, R(0));
    EXPECT_THROW(norm_comparison(p1, {HS("x0", f, 1), HS("2*x0", f, 1)}, F, grid), PreconditionError);
}

TEST(Completion, Examples) {
    const Field f = Q5();
    Variety p1 = Variety::projective_space(f, 1);
    EXPECT_TRUE(complete_to_full_rank(p1, {HS("x0", f, 1), HS("x1", f, 1), HS("x0-x1", f, 1)}, 1, 1).empty());
    Variety p2 = Variety::projective_space(f, 2);
    EXPECT_TRUE(complete_to_full_rank(p2, {HS("x0", f, 2), HS("x1", f, 2), HS("x2", f, 2), HS("x0+x1+x2", f, 2)}, 1, 1).empty());

    std::vector<Hypersurface> squares{HS("x0^2", f, 1), HS("x1^2", f, 1), HS("(x0-x1)^2", f, 1)};
    auto ts = complete_to_full_rank(p1, squares, 2, 42);
    ASSERT_EQ(ts.size(), 1u);
    const HilbertData& h = p1.hilbert(2);
    for (const auto& pair : subsets_of_size(3, 2)) {
        std::vector<const Hypersurface*> rows{&squares[pair[0]], &squares[pair[1]]};
        ASSERT_EQ(class_rank(h, rows), 2u);
        rows.push_back(&ts[0]);
        EXPECT_EQ(class_rank(h, rows), 3u);
    }
    // deterministic from the seed
    EXPECT_EQ(complete_to_full_rank(p1, squares, 2, 42)[0].poly(), ts[0].poly());
}

TEST(Completion, TadicSmallPrime) {
    const Field f = T2();
    Variety p1 = Variety::projective_space(f, 1);
    std::vector<Hypersurface> squares{HS("x0^2", f, 1), HS("x1^2", f, 1), HS("(x0+t*x1)^2", f, 1)};
    auto ts = complete_to_full_rank(p1, squares, 2, 5);
    ASSERT_EQ(ts.size(), 1u);
}

TEST(HypersurfaceTest, NormsAndLifting) {
    const Field f = Q5();
    Hypersurface q = HS("25*x0 + 1/5*x1", f, 1);
    EXPECT_EQ(q.norm(), R(1));
    EXPECT_EQ(q.lifted(3).degree(), 3u);
    EXPECT_EQ(q.lifted(3).poly(), q.poly().pow(3));
    EXPECT_THROW(HS("x0^2", f, 1).lifted(3), InputError);
    EXPECT_EQ(q.scaled(f.from_int(5)).norm(), R(0));
}
