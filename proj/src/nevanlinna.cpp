#include "nevan/nevanlinna.hpp"

#include <algorithm>
#include <map>

namespace nevan {

namespace {

void collect_heights(const Polynomial& f, std::map<long, Rational>& heights) {
    for (const auto& [e, c] : f.terms()) {
        const Rational v = f.field().logabs(c).value();
        const long k = static_cast<long>(e.total());
        auto it = heights.find(k);
        if (it == heights.end())
            heights.emplace(k, v);
        else if (v > it->second)
            it->second = v;
    }
}

}  // namespace

NewtonPolygon::NewtonPolygon(const Polynomial& f) {
    if (f.is_zero()) throw InputError("Newton polygon of the zero polynomial");
    std::map<long, Rational> heights;
    collect_heights(f, heights);
    build(heights);
}

NewtonPolygon NewtonPolygon::joint(const std::vector<Polynomial>& polys) {
    std::map<long, Rational> heights;
    for (const auto& f : polys) collect_heights(f, heights);
    if (heights.empty()) throw InputError("joint Newton polygon of zero polynomials");
    NewtonPolygon np;
    np.build(heights);
    return np;
}

void NewtonPolygon::build(const std::map<long, Rational>& heights) {
    // upper hull, left to right
    auto cross_up = [](const NewtonVertex& a, const NewtonVertex& b, const NewtonVertex& c) {
        // true when b lies on or below segment a-c, i.e. slope(a,b) <= slope(b,c)
        Rational lhs = (b.height - a.height) * (c.degree - b.degree);
        Rational rhs = (c.height - b.height) * (b.degree - a.degree);
        return lhs <= rhs;
    };
    for (const auto& [k, c] : heights) {
        NewtonVertex v{k, c};
        while (vertices_.size() >= 2 && cross_up(vertices_[vertices_.size() - 2], vertices_.back(), v))
            vertices_.pop_back();
        vertices_.push_back(std::move(v));
    }
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[i + 1];
        breaks_.push_back(Rational((a.height - b.height) / (b.degree - a.degree)));
    }
}

Rational NewtonPolygon::envelope(const Rational& rho) const {
    Rational best = vertices_.front().height + vertices_.front().degree * rho;
    for (const auto& v : vertices_) {
        Rational val = v.height + v.degree * rho;
        if (val > best) best = val;
    }
    return best;
}

long NewtonPolygon::n_at(const Rational& rho) const {
    std::size_t i = 0;
    while (i < breaks_.size() && breaks_[i] <= rho) ++i;
    return vertices_[i].degree;
}

Rational NewtonPolygon::counting(const Rational& rho) const {
    Rational total = vertices_.front().degree * rho;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (breaks_[i] >= rho) break;
        total += (vertices_[i + 1].degree - vertices_[i].degree) * (rho - breaks_[i]);
    }
    return total;
}

LogValue gauss_norm(const Polynomial& f, const Rational& rho) {
    LogValue best = LogValue::neg_inf();
    for (const auto& [e, c] : f.terms()) {
        LogValue v = f.field().logabs(c) + LogValue(Rational(static_cast<long>(e.total()) * rho));
        best = max(best, v);
    }
    return best;
}

LogValue gauss_norm(const RationalFunction& f, const Rational& rho) {
    return gauss_norm(f.num(), rho) - gauss_norm(f.den(), rho);
}

long count_n(const Polynomial& f, const Rational& rho) { return NewtonPolygon(f).n_at(rho); }

long count_n_at_zero(const Polynomial& f) {
    if (f.is_zero()) throw InputError("n(0,0) of the zero polynomial");
    return f.min_total_degree();
}

Rational count_N(const Polynomial& f, const Rational& rho) { return NewtonPolygon(f).counting(rho); }

PoleZeroCount count_N_rational(const RationalFunction& f, const Rational& rho) {
    if (f.is_zero()) throw InputError("counting function of the zero function");
    return {count_N(f.num(), rho), count_N(f.den(), rho)};
}

Rational poisson_jensen_constant(const RationalFunction& f, const std::vector<Rational>& grid) {
    if (f.is_zero()) throw InputError("Poisson-Jensen-Green for the zero function");
    if (grid.empty()) throw InputError("Poisson-Jensen-Green needs a nonempty grid");
    NewtonPolygon num(f.num()), den(f.den());
    std::optional<Rational> constant;
    for (const Rational& rho : grid) {
        Rational c = num.counting(rho) - den.counting(rho) - (num.envelope(rho) - den.envelope(rho));
        if (!constant)
            constant = c;
        else if (*constant != c)
            throw ConsistencyError("Poisson-Jensen-Green: N(0)-N(inf)-log|f| is " + constant->get_str() +
                                   " and " + c.get_str() + " at rho=" + rho.get_str());
    }
    return *constant;
}

Rational proximity_m(const RationalFunction& f, const std::optional<Scalar>& target, const Rational& rho) {
    if (!target) {
        if (f.is_zero()) throw InputError("proximity to infinity of the zero function");
        Rational v = gauss_norm(f, rho).value();
        return v > 0 ? v : Rational(0);
    }
    RationalFunction shifted = f - RationalFunction(Polynomial::constant(f.field(), f.nvars(), *target));
    if (shifted.is_zero()) throw InputError("proximity m_f(a, r) with f identically a");
    return proximity_m(shifted.inv(), std::nullopt, rho);
}

Rational characteristic_T(const RationalFunction& f, const Rational& rho) {
    if (f.is_zero()) throw InputError("characteristic function of the zero function");
    return proximity_m(f, std::nullopt, rho) + count_N(f.den(), rho);
}

std::vector<Rational> merged_breakpoints(const std::vector<const Polynomial*>& polys) {
    std::vector<Rational> all;
    for (const Polynomial* p : polys) {
        if (p->is_zero()) continue;
        NewtonPolygon np(*p);
        all.insert(all.end(), np.breakpoints().begin(), np.breakpoints().end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace nevan
