#pragma once

// Gauss norms, Newton polygons and the Nevanlinna functions of a single
// polynomial or rational function.
//
// A radius r is carried by its normalized logarithm rho = log r (so r equals
// the uniformizer raised to -rho). Every function here is piecewise linear
// in rho with breakpoints at the Newton polygon's slopes, so all values are
// exact rationals.

#include <map>
#include <optional>
#include <vector>

#include "nevan/rational_function.hpp"

namespace nevan {

struct NewtonVertex {
    long degree;      // total degree k
    Rational height;  // c_k = max_{|gamma| = k} logabs(a_gamma)
};

/// Upper convex hull of {(k, c_k)}. Vertices have strictly increasing degree
/// and the hull slopes strictly decrease.
class NewtonPolygon {
public:
    /// Throws InputError for the zero polynomial.
    explicit NewtonPolygon(const Polynomial& f);
    /// Hull of the union of all supports: its envelope is max_i log |f_i|_r.
    /// Throws InputError if every polynomial is zero.
    static NewtonPolygon joint(const std::vector<Polynomial>& polys);

    const std::vector<NewtonVertex>& vertices() const noexcept { return vertices_; }
    /// rho values where n(0, r) jumps, strictly increasing. Between vertex i
    /// and i+1 the breakpoint is (c_i - c_{i+1}) / (k_{i+1} - k_i).
    const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }

    /// max_k (c_k + k*rho)
    Rational envelope(const Rational& rho) const;
    /// Largest degree attaining the envelope at rho.
    long n_at(const Rational& rho) const;
    /// n(0, 0): the minimal support degree.
    long n_at_zero() const { return vertices_.front().degree; }
    /// N(0, r) = n(0,0)*rho + sum over breakpoints rho_j < rho of (n_{j+1} - n_j)(rho - rho_j).
    Rational counting(const Rational& rho) const;

private:
    NewtonPolygon() = default;
    void build(const std::map<long, Rational>& heights);

    std::vector<NewtonVertex> vertices_;
    std::vector<Rational> breaks_;
};

/// log |f|_r = max over the support of logabs(a_gamma) + |gamma|*rho; -inf for f = 0.
LogValue gauss_norm(const Polynomial& f, const Rational& rho);
/// log |g/h|_r = log |g|_r - log |h|_r.
LogValue gauss_norm(const RationalFunction& f, const Rational& rho);

/// n_f(0, r); throws InputError for f = 0.
long count_n(const Polynomial& f, const Rational& rho);
/// n_f(0, 0); throws InputError for f = 0.
long count_n_at_zero(const Polynomial& f);

/// N_f(0, r); throws InputError for f = 0.
Rational count_N(const Polynomial& f, const Rational& rho);

struct PoleZeroCount {
    Rational zeros;  // N_f(0, r) = N_num(0, r)
    Rational poles;  // N_f(inf, r) = N_den(0, r)
};
PoleZeroCount count_N_rational(const RationalFunction& f, const Rational& rho);

/// C_f with N_f(0,r) - N_f(inf,r) = log|f|_r + C_f, checked at every grid
/// point. Throws ConsistencyError if the difference is not constant.
Rational poisson_jensen_constant(const RationalFunction& f, const std::vector<Rational>& grid);

/// m_f(a, r); target nullopt means a = infinity. Throws InputError if f == a.
Rational proximity_m(const RationalFunction& f, const std::optional<Scalar>& target, const Rational& rho);

/// T_f(r) = m_f(inf, r) + N_f(inf, r).
Rational characteristic_T(const RationalFunction& f, const Rational& rho);

/// Breakpoints of every Newton polygon of the given nonzero polynomials, merged and sorted.
std::vector<Rational> merged_breakpoints(const std::vector<const Polynomial*>& polys);

}  // namespace nevan
