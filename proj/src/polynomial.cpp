#include "nevan/polynomial.hpp"

#include <algorithm>
#include <iterator>

namespace nevan {

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
    Polynomial p(field, nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t i) {
    return monomial(field, MultiIndex::unit(nvars, i), field.one());
}

Polynomial Polynomial::monomial(Field field, const MultiIndex& e, const Scalar& c) {
    Polynomial p(field, e.size());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars,
                                  const std::vector<std::pair<MultiIndex, Scalar>>& terms) {
    Polynomial p(field, nvars);
    for (const auto& [e, c] : terms) {
        if (e.size() != nvars) throw InputError("term arity does not match the ring");
        p.add_term(e, c);
    }
    return p;
}

void Polynomial::add_term(const MultiIndex& e, const Scalar& c) {
    field_.require(c);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw InputError("polynomials over different fields");
    if (nvars_ != o.nvars_) throw InputError("polynomials in different numbers of variables");
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Scalar Polynomial::constant_term() const { return coefficient(MultiIndex(nvars_)); }

Scalar Polynomial::coefficient(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

long Polynomial::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.rbegin()->first.total());
}

long Polynomial::min_total_degree() const {
    if (terms_.empty()) throw InputError("minimum degree of the zero polynomial");
    return static_cast<long>(terms_.begin()->first.total());
}

long Polynomial::degree_in(std::size_t i) const noexcept {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[i]);
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

const MultiIndex& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(field_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    field_.require(c);
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, a * c);
    return r;
}

Polynomial Polynomial::shifted(const MultiIndex& shift, const Scalar& c) const {
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, a * c);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = constant(field_, nvars_, field_.one());
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inv());
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
    if (subs.size() != nvars_) throw InputError("compose: expected " + std::to_string(nvars_) + " substitutions");
    if (subs.empty()) throw InputError("compose: no target ring");
    const Field& f = subs.front().field();
    const std::size_t m = subs.front().nvars();
    for (const auto& s : subs) subs.front().check_same_ring(s);
    if (!(f == field_)) throw InputError("compose: substitutions over a different field");

    // powers[i][k] = subs[i]^k, filled lazily
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto& v = powers[i];
        if (v.empty()) v.push_back(constant(f, m, f.one()));
        while (v.size() <= k) v.push_back(v.back() * subs[i]);
        return v[k];
    };
    Polynomial r(f, m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(f, m, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw InputError("evaluate: point has wrong dimension");
    Scalar r = field_.zero();
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        r += t;
    }
    return r;
}

Polynomial Polynomial::map_monomials(const std::function<MultiIndex(const MultiIndex&)>& f,
                                     std::size_t new_nvars) const {
    Polynomial r(field_, new_nvars);
    for (const auto& [e, c] : terms_) {
        MultiIndex n = f(e);
        if (n.size() != new_nvars) throw InputError("map_monomials: arity mismatch");
        r.add_term(n, c);
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::vector<std::string> domain_names(std::size_t m) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < m; ++i) v.push_back("z" + std::to_string(i + 1));
    return v;
}

std::vector<std::string> ambient_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string Polynomial::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    auto names = names_in.empty() ? domain_names(nvars_) : names_in;
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c.is_rational() && sgn(c.rational()) < 0;
        Scalar mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = mag.str();
        bool compound = coef.find_first_of("+ ") != std::string::npos;
        if (compound) coef = "(" + coef + ")";
        if (mono.empty())
            out += coef;
        else if (mag.is_one())
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

// ------------------------------------------------------------ division

std::pair<Polynomial, Polynomial> divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (!(f.field() == g.field()) || f.nvars() != g.nvars()) throw InputError("divide: ring mismatch");
    Polynomial::TermMap r = f.terms();
    Polynomial q(f.field(), f.nvars()), rem(f.field(), f.nvars());
    const MultiIndex& lm = g.leading_monomial();
    const Scalar lc_inv = g.leading_coefficient().inv();
    std::vector<std::pair<MultiIndex, Scalar>> qt, rt;
    while (!r.empty()) {
        auto top = std::prev(r.end());
        if (top->first.dominates(lm)) {
            MultiIndex shift = top->first - lm;
            Scalar c = top->second * lc_inv;
            for (const auto& [e, a] : g.terms()) {
                MultiIndex k = e + shift;
                auto [it, inserted] = r.try_emplace(k, -(a * c));
                if (!inserted) {
                    it->second -= a * c;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
            qt.emplace_back(std::move(shift), std::move(c));
        } else {
            rt.emplace_back(top->first, top->second);
            r.erase(top);
        }
    }
    return {Polynomial::from_terms(f.field(), f.nvars(), qt), Polynomial::from_terms(f.field(), f.nvars(), rt)};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divide(f, g);
    if (!r.is_zero()) throw DivisibilityError("exact_div: " + g.str() + " does not divide " + f.str());
    return q;
}

bool divides(const Polynomial& g, const Polynomial& f) {
    if (g.is_zero()) return f.is_zero();
    return divide(f, g).second.is_zero();
}

// ------------------------------------------------------------ gcd

namespace {

long main_var(const Polynomial& f) {
    long v = -1;
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && static_cast<long>(i) > v) v = static_cast<long>(i);
    return v;
}

/// Coefficients of f as a polynomial in variable v (exponent of v zeroed).
std::map<std::uint32_t, Polynomial> coeffs_in(const Polynomial& f, std::size_t v) {
    std::map<std::uint32_t, std::vector<std::pair<MultiIndex, Scalar>>> buckets;
    for (const auto& [e, c] : f.terms()) {
        MultiIndex k = e;
        k[v] = 0;
        buckets[e[v]].emplace_back(std::move(k), c);
    }
    std::map<std::uint32_t, Polynomial> out;
    for (auto& [d, ts] : buckets) out.emplace(d, Polynomial::from_terms(f.field(), f.nvars(), ts));
    return out;
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g);

Polynomial content_in(const Polynomial& f, std::size_t v) {
    Polynomial c(f.field(), f.nvars());
    for (const auto& [d, coef] : coeffs_in(f, v)) {
        c = gcd_impl(c, coef);
        if (c.is_constant()) break;
    }
    return c.monic();
}

Polynomial primitive_in(const Polynomial& f, std::size_t v) {
    return exact_div(f, content_in(f, v)).monic();
}

/// Pseudo-remainder of a by b with respect to variable v.
Polynomial prem(Polynomial a, const Polynomial& b, std::size_t v) {
    const long db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    const Polynomial lb = bc.rbegin()->second;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const long da = a.degree_in(v);
        Polynomial la = coeffs_in(a, v).rbegin()->second;
        MultiIndex sh(a.nvars());
        sh[v] = static_cast<std::uint32_t>(da - db);
        a = a * lb - (la * b).shifted(sh, a.field().one());
    }
    return a;
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const Polynomial one = Polynomial::constant(f.field(), f.nvars(), f.field().one());
    if (f.is_constant() || g.is_constant()) return one;
    const auto v = static_cast<std::size_t>(std::max(main_var(f), main_var(g)));
    if (f.degree_in(v) <= 0) return gcd_impl(f, content_in(g, v));
    if (g.degree_in(v) <= 0) return gcd_impl(content_in(f, v), g);

    Polynomial cf = content_in(f, v), cg = content_in(g, v);
    Polynomial c = gcd_impl(cf, cg);
    Polynomial a = exact_div(f, cf).monic(), b = exact_div(g, cg).monic();
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = prem(a, b, v);
        a = std::move(b);
        if (r.is_zero()) break;
        if (r.degree_in(v) <= 0) return c.monic();
        b = primitive_in(r, v);
    }
    return (c * primitive_in(a, v)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (!(f.field() == g.field()) || f.nvars() != g.nvars()) throw InputError("gcd: ring mismatch");
    return gcd_impl(f, g);
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.field(), f.nvars());
    return exact_div(f * g, gcd(f, g)).monic();
}

// ------------------------------------------------------------ derivatives

Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& gamma) {
    if (gamma.size() != f.nvars()) throw InputError("hasse_derivative: multi-index arity mismatch");
    std::vector<std::pair<MultiIndex, Scalar>> out;
    for (const auto& [alpha, a] : f.terms()) {
        if (!alpha.dominates(gamma)) continue;
        out.emplace_back(alpha - gamma, a * f.field().from_integer(binomial(alpha, gamma)));
    }
    return Polynomial::from_terms(f.field(), f.nvars(), out);
}

Polynomial partial_derivative(const Polynomial& f, const MultiIndex& gamma) {
    if (gamma.size() != f.nvars()) throw InputError("partial_derivative: multi-index arity mismatch");
    std::vector<std::pair<MultiIndex, Scalar>> out;
    const Integer gf = factorial(gamma);
    for (const auto& [alpha, a] : f.terms()) {
        if (!alpha.dominates(gamma)) continue;
        // falling factorial prod alpha_i!/(alpha_i-gamma_i)! = binom(alpha,gamma) * gamma!
        out.emplace_back(alpha - gamma, a * f.field().from_integer(binomial(alpha, gamma) * gf));
    }
    return Polynomial::from_terms(f.field(), f.nvars(), out);
}

unsigned multiplicity(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw InputError("multiplicity in the zero polynomial");
    if (g.is_constant()) throw InputError("multiplicity of a constant");
    unsigned e = 0;
    Polynomial cur = f;
    for (;;) {
        auto [q, r] = divide(cur, g);
        if (!r.is_zero()) return e;
        cur = std::move(q);
        ++e;
    }
}

}  // namespace nevan
