#include "nevan/rational_function.hpp"

#include <algorithm>
#include <set>

namespace nevan {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (!(num_.field() == den_.field()) || num_.nvars() != den_.nvars())
        throw InputError("rational function: numerator and denominator in different rings");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.field(), den_.nvars(), den_.field().one());
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Scalar lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Scalar inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction::RationalFunction(Polynomial num)
    : RationalFunction(num, Polynomial::constant(num.field(), num.nvars(), num.field().one())) {}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inv(); }

RationalFunction RationalFunction::scaled(const Scalar& c) const { return RationalFunction(num_.scaled(c), den_); }

std::string RationalFunction::str(const std::vector<std::string>& names) const {
    if (den_.is_constant()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

RationalFunction hasse_first(const RationalFunction& f, std::size_t j) {
    const MultiIndex e = MultiIndex::unit(f.nvars(), j);
    const Polynomial& g = f.num();
    const Polynomial& h = f.den();
    return RationalFunction(h * hasse_derivative(g, e) - g * hasse_derivative(h, e), h * h);
}

namespace {

bool chain_search(const MultiIndex& alpha, std::uint32_t p, std::set<MultiIndex>& dead, std::vector<MultiIndex>& path) {
    if (alpha.is_zero()) return true;
    if (dead.count(alpha)) return false;
    // lowest-index nonzero component first, then the rest in index order
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        if (alpha[j]) order.push_back(j);
    for (std::size_t j : order) {
        // stepping alpha - e_j -> alpha divides by binom(alpha, alpha - e_j) = alpha_j
        if (p != 0 && alpha[j] % p == 0) continue;
        MultiIndex below = alpha;
        --below[j];
        path.push_back(alpha);
        if (chain_search(below, p, dead, path)) return true;
        path.pop_back();
    }
    dead.insert(alpha);
    return false;
}

}  // namespace

std::optional<std::vector<MultiIndex>> hasse_chain(const MultiIndex& gamma, std::uint32_t characteristic) {
    std::set<MultiIndex> dead;
    std::vector<MultiIndex> path;
    if (!chain_search(gamma, characteristic, dead, path)) return std::nullopt;
    std::reverse(path.begin(), path.end());
    return path;
}

RationalFunction hasse_derivative(const RationalFunction& f, const MultiIndex& gamma) {
    if (gamma.size() != f.nvars()) throw InputError("hasse_derivative: multi-index arity mismatch");
    if (gamma.is_zero()) return f;
    // entire functions use the defining sum directly
    if (f.is_polynomial()) return RationalFunction(hasse_derivative(f.num(), gamma), f.den());
    auto chain = hasse_chain(gamma, f.field().characteristic());
    if (!chain) throw InputError("inadmissible multi-index " + gamma.str() + ": every decomposition chain hits a vanishing binomial");
    RationalFunction cur = f;
    MultiIndex prev(f.nvars());
    for (const MultiIndex& alpha : *chain) {
        std::size_t j = 0;
        while (alpha[j] == prev[j]) ++j;
        RationalFunction next = hasse_first(cur, j);
        // binom(prev + e_j, prev) = prev_j + 1 = alpha_j
        Scalar factor = f.field().from_int(alpha[j]);
        cur = next.scaled(factor.inv());
        prev = alpha;
    }
    return cur;
}

}  // namespace nevan
