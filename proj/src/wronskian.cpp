#include "nevan/wronskian.hpp"

#include <algorithm>
#include <set>

namespace nevan {

namespace {

// Fixed seed: the evaluation prefilter only ever shortcuts a full-rank verdict,
// so results do not depend on it, but runs stay reproducible.
constexpr std::uint64_t kPrefilterSeed = 0x5eed;

std::vector<Polynomial> derivative_row(const std::vector<Polynomial>& polys, const MultiIndex& gamma) {
    std::vector<Polynomial> row;
    row.reserve(polys.size());
    for (const auto& p : polys) row.push_back(hasse_derivative(p, gamma));
    return row;
}

std::size_t first_order_rank(const std::vector<Polynomial>& polys) {
    const std::size_t m = polys.front().nvars();
    PolyMatrix rows{derivative_row(polys, MultiIndex(m))};
    for (std::size_t j = 0; j < m; ++j) rows.push_back(derivative_row(polys, MultiIndex::unit(m, j)));
    std::mt19937_64 rng(kPrefilterSeed);
    return poly_matrix_rank(rows, &rng);
}

}  // namespace

std::size_t rank_f(const ProjectiveMap& f) { return first_order_rank(f.coords()) - 1; }

std::vector<Polynomial> basis_composites(const ProjectiveMap& f, const Variety& v, unsigned d) {
    f.require_in(v);
    std::vector<Polynomial> out;
    for (const auto& a : v.hilbert(d).basis) out.push_back(evaluate(a, f));
    return out;
}

std::size_t composite_first_order_rank(const std::vector<Polynomial>& composites) {
    if (composites.empty()) throw InputError("no composites");
    const std::size_t r = first_order_rank(composites);
    return r == 0 ? 0 : r - 1;
}

NondegeneracyResult nondegeneracy_check(const ProjectiveMap& f, const Variety& v, unsigned d) {
    const auto composites = basis_composites(f, v, d);
    std::set<MultiIndex, GrlexLess> support;
    for (const auto& c : composites)
        for (const auto& [e, coef] : c.terms()) support.insert(e);
    Matrix m(f.field(), support.size(), composites.size());
    std::size_t i = 0;
    for (const auto& e : support) {
        for (std::size_t j = 0; j < composites.size(); ++j) m(i, j) = composites[j].coefficient(e);
        ++i;
    }
    const auto kernel = nullspace(m);
    NondegeneracyResult out;
    out.nondegenerate = kernel.empty();
    if (!kernel.empty()) {
        const auto& basis = v.hilbert(d).basis;
        Polynomial q(f.field(), v.ambient_dim() + 1);
        for (std::size_t j = 0; j < basis.size(); ++j) q += basis[j].poly().scaled(kernel.front()[j]);
        out.witness = Hypersurface(std::move(q));
    }
    return out;
}

std::optional<unsigned> index_s(const ProjectiveMap& f, const Variety& v, unsigned d) {
    const std::uint32_t p = f.field().characteristic();
    if (p == 0) return std::nullopt;
    if (!nondegeneracy_check(f, v, d).nondegenerate)
        throw PreconditionError("index of non-degeneracy needs a map that is non-degenerate over I_d(V)");
    const auto composites = basis_composites(f, v, d);
    const std::size_t m = f.domain_vars();
    long max_deg = 0;
    for (const auto& c : composites) max_deg = std::max(max_deg, c.total_degree());

    std::uint64_t q = 1;
    for (unsigned s = 1;; ++s) {
        q *= p;
        // g = sum_tau z^tau g_tau(z^q); rows indexed by tau, entries g_tau(y)
        std::map<MultiIndex, std::vector<Polynomial>> rows;
        for (std::size_t j = 0; j < composites.size(); ++j) {
            for (const auto& [e, c] : composites[j].terms()) {
                MultiIndex tau(m), y(m);
                for (std::size_t i = 0; i < m; ++i) {
                    tau[i] = static_cast<std::uint32_t>(e[i] % q);
                    y[i] = static_cast<std::uint32_t>(e[i] / q);
                }
                auto it = rows.find(tau);
                if (it == rows.end())
                    it = rows.emplace(tau, std::vector<Polynomial>(composites.size(), Polynomial(f.field(), m))).first;
                it->second[j] += Polynomial::monomial(f.field(), y, c);
            }
        }
        PolyMatrix mat;
        for (auto& [tau, row] : rows) mat.push_back(std::move(row));
        std::mt19937_64 rng(kPrefilterSeed);
        if (poly_matrix_rank(mat, &rng) == composites.size()) return s;
        if (q > static_cast<std::uint64_t>(max_deg))
            throw ConsistencyError("composites independent over F but dependent with p^s beyond every degree");
    }
}

std::uint64_t kappa0(std::size_t H, std::size_t k, std::optional<unsigned> s, std::uint32_t p) {
    if (H < 1 || k + 1 > H)
        throw InputError("kappa_0 needs H >= 1 and k <= H - 1 (H = " + std::to_string(H) + ", k = " + std::to_string(k) + ")");
    if (p == 0) return H - k;
    if (!s || *s < 1) throw InputError("kappa_0 in characteristic p needs the index s >= 1");
    std::uint64_t scale = 1;
    for (unsigned i = 1; i < *s; ++i) scale *= p;
    return scale * (H - k);
}

std::vector<MultiIndex> wronskian_candidates(std::size_t m, std::uint64_t max_grade) {
    std::vector<MultiIndex> out;
    for (std::uint64_t g = 0; g <= max_grade; ++g) {
        auto grade = indices_of_degree(m, g);
        out.insert(out.end(), grade.rbegin(), grade.rend());
    }
    return out;
}

Polynomial wronskian_determinant(const std::vector<Polynomial>& composites, const std::vector<MultiIndex>& gammas) {
    PolyMatrix rows;
    for (const auto& g : gammas) rows.push_back(derivative_row(composites, g));
    return poly_determinant(rows);
}

WronskianCertificate find_wronskian(const std::vector<Polynomial>& composites, std::uint64_t k0) {
    if (composites.empty()) throw InputError("no composites");
    const std::size_t H = composites.size();
    const std::size_t m = composites.front().nvars();
    std::mt19937_64 rng(kPrefilterSeed);
    WronskianCertificate cert{{}, Polynomial(composites.front().field(), m), 0, k0};
    PolyMatrix rows;
    for (const auto& gamma : wronskian_candidates(m, k0)) {
        if (rows.size() == H) break;
        rows.push_back(derivative_row(composites, gamma));
        if (poly_matrix_rank(rows, &rng) == rows.size()) {
            cert.gammas.push_back(gamma);
            cert.gamma_sum += gamma.total();
        } else {
            rows.pop_back();
        }
    }
    if (rows.size() < H)
        throw ConsistencyError("Wronskian bound violated: rank " + std::to_string(rows.size()) + " < " +
                               std::to_string(H) + " with |gamma| <= " + std::to_string(k0));
    cert.W = poly_determinant(rows);
    if (cert.W.is_zero()) throw ConsistencyError("Wronskian vanishes despite full rank");
    return cert;
}

WronskianCertificate find_wronskian(const ProjectiveMap& f, const Variety& v, unsigned d, std::uint64_t k0) {
    return find_wronskian(basis_composites(f, v, d), k0);
}

}  // namespace nevan
