#include "nevan/nochka.hpp"

#include <algorithm>

#include "nevan/errors.hpp"
#include "nevan/lp.hpp"
#include "nevan/projgeom.hpp"

namespace nevan {

std::string NochkaWeights::str() const {
    std::string out = "omega~=" + to_string(omega_tilde) + " omega=(";
    for (std::size_t i = 0; i < omega.size(); ++i) out += (i ? "," : "") + to_string(omega[i]);
    return out + ")";
}

NochkaWeights compute_weights(std::size_t q, std::size_t N, std::size_t n) {
    if (n < 1 || N < n) throw PreconditionError("weights need N >= n >= 1");
    if (q <= 2 * N - n + 1)
        throw PreconditionError("weights need q > 2N - n + 1 (q = " + std::to_string(q) + ", N = " + std::to_string(N) +
                                ", n = " + std::to_string(n) + ")");
    using S = LinearConstraint::Sense;
    const std::size_t vars = q + 1, tilde = q;
    LinearProgram lp;
    lp.nvars = vars;
    auto row = [&] { return std::vector<Rational>(vars); };
    for (std::size_t i = 0; i < q; ++i) {
        auto r = row();
        r[i] = 1;
        r[tilde] = -1;
        lp.add(r, S::le, 0);
        auto u = row();
        u[i] = 1;
        lp.add(u, S::le, 1);
    }
    Rational lower(Integer(static_cast<unsigned long>(n + 1)), Integer(static_cast<unsigned long>(2 * N - n + 1)));
    lower.canonicalize();
    Rational upper(Integer(static_cast<unsigned long>(n)), Integer(static_cast<unsigned long>(N)));
    upper.canonicalize();
    auto t = row();
    t[tilde] = 1;
    lp.add(t, S::ge, Rational(lower));
    lp.add(t, S::le, Rational(upper));
    auto sum = row();
    for (std::size_t i = 0; i < q; ++i) sum[i] = 1;
    sum[tilde] = -Rational(static_cast<long>(q) - 2 * static_cast<long>(N) + static_cast<long>(n) - 1);
    lp.add(sum, S::eq, Rational(static_cast<long>(n + 1)));
    for (const auto& idx : subsets_of_size(q, N + 1)) {
        auto r = row();
        for (auto i : idx) r[i] = 1;
        lp.add(r, S::le, Rational(static_cast<long>(n + 1)));
    }

    std::vector<std::vector<Rational>> objectives;
    objectives.push_back(t);
    for (std::size_t i = 0; i < q; ++i) {
        auto o = row();
        o[i] = 1;
        objectives.push_back(o);
    }
    auto x = lexicographic_minimize(lp, objectives);
    if (!x) throw ConsistencyError("weights infeasible");

    NochkaWeights w;
    w.q = q;
    w.N = N;
    w.n = n;
    w.omega.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(q));
    w.omega_tilde = (*x)[tilde];
    if (auto bad = weight_violations(w); !bad.empty()) throw ConsistencyError("weights infeasible: " + bad.front());
    return w;
}

std::vector<std::string> weight_violations(const NochkaWeights& w) {
    std::vector<std::string> bad;
    const std::size_t q = w.q, N = w.N, n = w.n;
    if (w.omega.size() != q) return {"weight vector has the wrong length"};
    Rational mx = w.omega.empty() ? Rational(0) : *std::max_element(w.omega.begin(), w.omega.end());
    if (mx != w.omega_tilde) bad.push_back("omega~ is not the largest weight");
    for (std::size_t i = 0; i < q; ++i)
        if (!(w.omega[i] > 0 && w.omega[i] <= 1)) bad.push_back("(i) fails at weight " + std::to_string(i + 1));
    Rational total = 0;
    for (const auto& o : w.omega) total += o;
    Rational expect = w.omega_tilde * (static_cast<long>(q) - 2 * static_cast<long>(N) + static_cast<long>(n) - 1) +
                      static_cast<long>(n + 1);
    if (total != expect) bad.push_back("(ii) sum of weights is " + to_string(total) + ", expected " + to_string(expect));
    Rational lower(static_cast<long>(n + 1), static_cast<long>(2 * N - n + 1));
    lower.canonicalize();
    Rational upper(static_cast<long>(n), static_cast<long>(N));
    upper.canonicalize();
    if (!(lower <= w.omega_tilde && w.omega_tilde <= upper)) bad.push_back("(iii) omega~ out of range");
    for (const auto& idx : subsets_of_size(q, N + 1)) {
        Rational s = 0;
        for (auto i : idx) s += w.omega[i];
        if (s > static_cast<long>(n + 1)) {
            bad.push_back("(iv) fails on a subset of size N+1");
            break;
        }
    }
    return bad;
}

namespace {

Rational rational_pow(const Rational& x, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

bool weighted_product_le(const NochkaWeights& w, const std::vector<Rational>& E, const std::vector<std::size_t>& R,
                         const std::vector<std::size_t>& S) {
    // raise both sides to the common denominator D of the weights
    Integer D = 1;
    for (auto i : R) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), w.omega[i].get_den_mpz_t());
    Rational lhs = 1, rhs = 1;
    for (auto i : R) {
        Integer a = w.omega[i].get_num() * (D / w.omega[i].get_den());
        lhs *= rational_pow(E[i], a.get_ui());
    }
    for (auto i : S) rhs *= rational_pow(E[i], D.get_ui());
    return lhs <= rhs;
}

SubsetSelection select_subset(const NochkaWeights& w, const std::vector<Rational>& E, const std::vector<std::size_t>& R,
                              const SubsetRank& rank) {
    const std::size_t target = w.n + 1;
    for (auto i : R) {
        if (i >= E.size() || i >= w.omega.size()) throw InputError("subset index out of range");
        if (E[i] < 1) throw InputError("subset selection needs E_i >= 1");
    }
    if (rank(R) < target) throw PreconditionError("subset has rank below n + 1");

    std::vector<std::size_t> order = R;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return E[a] > E[b]; });
    std::vector<std::size_t> chosen;
    std::size_t current = 0;
    for (auto i : order) {
        if (chosen.size() == target) break;
        chosen.push_back(i);
        std::size_t r = rank(chosen);
        if (r > current)
            current = r;
        else
            chosen.pop_back();
    }
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() == target && weighted_product_le(w, E, R, chosen)) return {chosen, false};

    // exhaustive: the full-rank subset with the largest product
    std::optional<std::vector<std::size_t>> best;
    Rational best_product;
    for (const auto& pos : subsets_of_size(R.size(), target)) {
        std::vector<std::size_t> s;
        for (auto p : pos) s.push_back(R[p]);
        std::sort(s.begin(), s.end());
        if (rank(s) != target) continue;
        Rational prod = 1;
        for (auto i : s) prod *= E[i];
        if (!best || prod > best_product) {
            best = s;
            best_product = prod;
        }
    }
    if (!best || !weighted_product_le(w, E, R, *best))
        throw ConsistencyError("weighted subset inequality violated: no full-rank subset dominates the weighted product");
    return {*best, true};
}

}  // namespace nevan
