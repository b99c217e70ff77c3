#include "nevan/selftest.hpp"

#include <random>
#include <sstream>

#include "nevan/harness.hpp"

namespace nevan {

namespace {

std::vector<Field> fields() {
    return {Field::padic(2), Field::padic(3), Field::padic(5), Field::tadic(2), Field::tadic(3), Field::tadic(5)};
}

Polynomial random_poly(std::mt19937_64& rng, const Field& f, std::size_t nvars, unsigned max_deg, unsigned terms) {
    for (;;) {
        std::vector<std::pair<MultiIndex, Scalar>> ts;
        for (unsigned t = 0; t < terms; ++t) {
            MultiIndex e(nvars);
            for (std::size_t v = 0; v < nvars; ++v) e[v] = static_cast<std::uint32_t>(rng() % (max_deg + 1));
            ts.emplace_back(e, f.random_element(rng, 2));
        }
        Polynomial p = Polynomial::from_terms(f, nvars, ts);
        if (!p.is_zero()) return p;
    }
}

Polynomial random_form(std::mt19937_64& rng, const Field& f, std::size_t M, unsigned deg) {
    for (;;) {
        std::vector<std::pair<MultiIndex, Scalar>> ts;
        for (const auto& e : indices_of_degree(M + 1, deg)) ts.emplace_back(e, f.random_element(rng, 2));
        Polynomial p = Polynomial::from_terms(f, M + 1, ts);
        if (!p.is_zero()) return p;
    }
}

class Suite {
public:
    Suite(std::string name, const Field& f) : r_{std::move(name), f.str(), 0, 0, {}} {}
    void check(bool ok, const std::string& what) {
        ++r_.cases;
        if (ok) return;
        if (!r_.failures) r_.first_failure = what;
        ++r_.failures;
    }
    SelftestResult result() const { return r_; }

private:
    SelftestResult r_;
};

const std::vector<Rational> kGrid = [] {
    std::vector<Rational> g;
    for (long k = -8; k <= 16; k += 3) g.emplace_back(k, 2);
    for (auto& x : g) x.canonicalize();
    return g;
}();

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
    std::vector<SelftestResult> out;
    for (const Field& f : fields()) {
        std::mt19937_64 rng(seed * 1000003 + f.prime() * 31 + static_cast<unsigned>(f.kind()));

        Suite gauss("gauss_norm_multiplicative", f);
        for (int i = 0; i < 60; ++i) {
            Polynomial a = random_poly(rng, f, 2, 4, 4), b = random_poly(rng, f, 2, 4, 4);
            const Rational& rho = kGrid[i % kGrid.size()];
            gauss.check(gauss_norm(a * b, rho) == gauss_norm(a, rho) + gauss_norm(b, rho), "a*b = " + (a * b).str());
        }
        out.push_back(gauss.result());

        Suite pj("poisson_jensen", f);
        for (int i = 0; i < 50; ++i) {
            RationalFunction g(random_poly(rng, f, 1, 6, 4), random_poly(rng, f, 1, 6, 4));
            bool ok = true;
            try {
                poisson_jensen_constant(g, kGrid);
            } catch (const ConsistencyError&) {
                ok = false;
            }
            pj.check(ok, g.str());
        }
        out.push_back(pj.result());

        Suite roots("root_oracle", f);
        for (int i = 0; i < 50; ++i) {
            Polynomial z = Polynomial::variable(f, 1, 0);
            Polynomial prod = Polynomial::constant(f, 1, f.one());
            std::vector<std::pair<Scalar, unsigned>> rs;
            for (int k = 0, nk = 1 + static_cast<int>(rng() % 3); k < nk; ++k) {
                Scalar a = f.random_element(rng, 3);
                bool dup = false;
                for (const auto& [b, _] : rs) dup = dup || b == a;
                if (dup) continue;
                unsigned mult = 1 + static_cast<unsigned>(rng() % 4);
                rs.emplace_back(a, mult);
                prod *= (z - Polynomial::constant(f, 1, a)).pow(mult);
            }
            for (std::uint64_t l : {1, 2, 3, 0}) {
                TruncationLevel lvl = l ? TruncationLevel(l) : TruncationLevel::infinite();
                const Polynomial part = truncation_polynomial(prod, lvl);
                for (const auto& rho : kGrid) {
                    Rational expect = 0;
                    for (const auto& [a, mult] : rs) {
                        Rational w = l ? Rational(std::min<std::uint64_t>(mult, l)) : Rational(mult);
                        if (a.is_zero())
                            expect += w * rho;
                        else if (rho > f.logabs(a).value())
                            expect += w * (rho - f.logabs(a).value());
                    }
                    roots.check(count_N(part, rho) == expect, prod.str() + " at level " + lvl.str());
                }
            }
        }
        out.push_back(roots.result());

        Suite leibniz("hasse_leibniz", f);
        for (int i = 0; i < 30; ++i) {
            Polynomial a = random_poly(rng, f, 2, 3, 3), b = random_poly(rng, f, 2, 3, 3);
            MultiIndex g{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)};
            Polynomial sum(f, 2);
            for (std::uint32_t x = 0; x <= g[0]; ++x)
                for (std::uint32_t y = 0; y <= g[1]; ++y) {
                    MultiIndex al{x, y};
                    sum += hasse_derivative(a, al) * hasse_derivative(b, g - al);
                }
            leibniz.check(hasse_derivative(a * b, g) == sum, "gamma " + g.str());
        }
        out.push_back(leibniz.result());

        Suite sq("squarefree_part", f);
        for (int i = 0; i < 25; ++i) {
            Polynomial a = random_poly(rng, f, 1, 3, 3);
            if (a.is_constant()) continue;
            Polynomial g = a.pow(1 + rng() % 4) * random_poly(rng, f, 1, 2, 2);
            if (g.is_constant()) continue;
            Polynomial s(f, 1);
            try {
                s = squarefree_part(g);
            } catch (const InseparableError&) {
                continue;  // no square-free part over F_p(t)
            }
            bool ok = divides(s, g) && squarefree_part(s) == s && divides(squarefree_part(a), s) &&
                      divides(g, s.pow(static_cast<std::uint64_t>(g.total_degree())));
            sq.check(ok, g.str());
        }
        out.push_back(sq.result());

        Suite fmt("first_main_theorem", f);
        for (int i = 0; i < 20; ++i) {
            std::vector<Polynomial> cs;
            for (int c = 0; c < 3; ++c) cs.push_back(random_poly(rng, f, 1, 4, 3));
            ProjectiveMap F = ProjectiveMap::reduce(cs);
            Hypersurface Q(random_form(rng, f, 2, 1 + static_cast<unsigned>(rng() % 2)));
            if (evaluate(Q, F).is_zero()) continue;
            bool ok = true;
            try {
                check_fmt(F, Q, kGrid);
            } catch (const ConsistencyError&) {
                ok = false;
            }
            fmt.check(ok, F.str() + " / " + Q.str());
        }
        out.push_back(fmt.result());

        Suite wr("wronskian_recompute", f);
        for (int i = 0; i < 10; ++i) {
            std::vector<Polynomial> cs;
            for (int c = 0; c < 3; ++c) cs.push_back(random_poly(rng, f, 1 + i % 2, 3, 3));
            ProjectiveMap F = ProjectiveMap::reduce(cs);
            Variety p2 = Variety::projective_space(f, 2);
            if (!nondegeneracy_check(F, p2, 1).nondegenerate) continue;
            std::uint64_t k0 = kappa0(3, rank_f(F), index_s(F, p2, 1), f.characteristic());
            WronskianCertificate c = find_wronskian(F, p2, 1, k0);
            bool ok = !c.W.is_zero() && wronskian_determinant(basis_composites(F, p2, 1), c.gammas) == c.W;
            for (const auto& g : c.gammas) ok = ok && g.total() <= k0;
            wr.check(ok, F.str());
        }
        out.push_back(wr.result());
    }

    Field q5 = Field::padic(5);
    Suite hil("hilbert_projective_space", q5);
    for (std::size_t M = 1; M <= 4; ++M)
        for (unsigned d = 1; d <= 6; ++d) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), M + d, d);
            hil.check(Integer(static_cast<unsigned long>(hilbert_function(Variety::projective_space(q5, M), d))) == b,
                      "M=" + std::to_string(M) + " d=" + std::to_string(d));
        }
    out.push_back(hil.result());

    Suite nw("nochka_weights", q5);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t N = n; N <= 4; ++N)
            for (std::size_t q = 2 * N - n + 2; q <= 10; ++q) {
                NochkaWeights w = compute_weights(q, N, n);
                nw.check(weight_violations(w).empty(), w.str());
            }
    out.push_back(nw.result());
    return out;
}

std::string selftest_csv(const std::vector<SelftestResult>& results) {
    std::ostringstream out;
    out << "suite,field,cases,failures,first_failure\n";
    for (const auto& r : results) {
        std::string ff = r.first_failure;
        for (auto& c : ff)
            if (c == ',' || c == '\n') c = ' ';
        out << r.suite << ',' << r.field << ',' << r.cases << ',' << r.failures << ',' << ff << '\n';
    }
    return out.str();
}

}  // namespace nevan
