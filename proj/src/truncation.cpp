#include "nevan/truncation.hpp"

namespace nevan {

TruncationLevel::TruncationLevel(std::uint64_t l) : level_(l) {
    if (l == 0) throw InputError("truncation level must be at least 1");
}

std::uint64_t TruncationLevel::value() const {
    if (!level_) throw InputError("infinite truncation level has no value");
    return *level_;
}

std::string TruncationLevel::str() const { return level_ ? std::to_string(*level_) : "inf"; }

namespace {

void require_nonzero(const Polynomial& f, const char* what) {
    if (f.is_zero()) throw InputError(std::string(what) + " of the zero polynomial");
}

Polynomial one_like(const Polynomial& f) { return Polynomial::constant(f.field(), f.nvars(), f.field().one()); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// lcm over j of f / gcd(f, D_j^{order} f).
Polynomial derivative_radical(const Polynomial& f, std::uint64_t order) {
    Polynomial acc = one_like(f);
    for (std::size_t j = 0; j < f.nvars(); ++j) {
        MultiIndex e(f.nvars());
        e[j] = static_cast<std::uint32_t>(order);
        Polynomial g = gcd(f, hasse_derivative(f, e));
        Polynomial h = exact_div(f, g).monic();
        acc = lcm(acc, h);
    }
    return acc.monic();
}

/// The largest divisor of f all of whose irreducible factors divide the square-free S.
Polynomial saturated_part(const Polynomial& f, const Polynomial& squarefree) {
    Polynomial acc = one_like(f);
    Polynomial rest = f;
    for (;;) {
        Polynomial c = gcd(rest, squarefree);
        if (c.is_constant()) return acc.monic();
        acc = acc * c;
        rest = exact_div(rest, c);
    }
}

}  // namespace

Polynomial radical(const Polynomial& f) {
    require_nonzero(f, "radical");
    return derivative_radical(f, 1);
}

std::optional<Polynomial> pth_power_root(const Polynomial& g, std::uint64_t q) {
    if (q == 1) return g;
    const Field& field = g.field();
    std::vector<std::pair<MultiIndex, Scalar>> out;
    for (const auto& [e, c] : g.terms()) {
        MultiIndex r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] % q) return std::nullopt;
            r[i] = static_cast<std::uint32_t>(e[i] / q);
        }
        auto root = field.pth_power_root(c, q);
        if (!root) return std::nullopt;
        out.emplace_back(std::move(r), std::move(*root));
    }
    return Polynomial::from_terms(field, g.nvars(), out);
}

Polynomial higher_radical(const Polynomial& f, unsigned s) {
    require_nonzero(f, "higher radical");
    const std::uint32_t p = f.field().characteristic();
    if (p == 0) throw InputError("higher p^s-radicals are defined in characteristic p > 0 only");
    if (s == 0) return radical(f);

    const std::uint64_t ps = ipow(p, s);
    const std::uint64_t ps1 = ipow(p, s - 1);
    const Polynomial prev = higher_radical(f, s - 1);
    // Strip every factor already found, whatever its multiplicity. Dividing by
    // gcd(f, prev^(p^s)) alone leaves a remnant once a multiplicity exceeds p^s,
    // and that remnant stops G from being a p^s-th power.
    const Polynomial fbar = exact_div(f, saturated_part(f, prev));
    const Polynomial big_h = derivative_radical(fbar, ps);
    const Polynomial big_g = exact_div(big_h, truncated_part(big_h, higher_radical(big_h, s - 1), ps1)).monic();
    auto root = pth_power_root(big_g, ps);
    if (!root)
        throw InseparableError("higher radical: G = " + big_g.str() + " is not a " + std::to_string(ps) +
                               "-th power over the coefficient field (inseparable factor)");
    return lcm(prev, *root);
}

unsigned stabilization_index(const Polynomial& f) {
    const std::uint32_t p = f.field().characteristic();
    if (p == 0) return 0;
    const auto deg = static_cast<std::uint64_t>(std::max<long>(f.total_degree(), 0));
    unsigned s = 0;
    for (std::uint64_t q = 1; q <= deg; q *= p) ++s;
    return s;
}

Polynomial squarefree_part(const Polynomial& f) {
    require_nonzero(f, "square-free part");
    if (f.field().characteristic() == 0) return radical(f);
    return higher_radical(f, stabilization_index(f));
}

Polynomial truncated_part(const Polynomial& f, const Polynomial& squarefree, std::uint64_t l) {
    Polynomial acc = one_like(f);
    Polynomial rest = f;
    for (std::uint64_t i = 0; i < l; ++i) {
        Polynomial c = gcd(rest, squarefree);
        if (c.is_constant()) break;
        acc = acc * c;
        rest = exact_div(rest, c);
    }
    return acc.monic();
}

Polynomial truncation_polynomial(const Polynomial& f, const TruncationLevel& l) {
    require_nonzero(f, "truncated counting");
    if (l.is_infinite()) return f;
    return truncated_part(f, squarefree_part(f), l.value());
}

Rational truncated_count(const Polynomial& f, const Rational& rho, const TruncationLevel& l) {
    return count_N(truncation_polynomial(f, l), rho);
}

}  // namespace nevan
