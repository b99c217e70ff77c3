#pragma once

// Sparse multivariate polynomials over a valued coefficient field.
//
// Terms are kept in graded-lexicographic order with no stored zeros, so two
// polynomials are equal iff their term maps are equal. The leading term is
// the grlex-largest one.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nevan/multi_index.hpp"
#include "nevan/valfield.hpp"

namespace nevan {

class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Scalar, GrlexLess>;

    /// The zero polynomial in nvars variables.
    Polynomial(Field field, std::size_t nvars);
    static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
    static Polynomial variable(Field field, std::size_t nvars, std::size_t i);
    static Polynomial monomial(Field field, const MultiIndex& e, const Scalar& c);
    static Polynomial from_terms(Field field, std::size_t nvars, const std::vector<std::pair<MultiIndex, Scalar>>& terms);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term value; meaningful for any polynomial.
    Scalar constant_term() const;
    Scalar coefficient(const MultiIndex& e) const;

    /// Maximum |gamma| over the support; -1 for zero.
    long total_degree() const noexcept;
    /// Minimum |gamma| over the support; throws on zero.
    long min_total_degree() const;
    /// Degree in variable i; -1 for zero.
    long degree_in(std::size_t i) const noexcept;
    bool is_homogeneous() const noexcept;

    /// Throws InputError on the zero polynomial.
    const MultiIndex& leading_monomial() const;
    const Scalar& leading_coefficient() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Scalar& c) const;
    /// *this * c * z^shift
    Polynomial shifted(const MultiIndex& shift, const Scalar& c) const;
    Polynomial pow(std::uint64_t e) const;

    /// Divide by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    /// Substitute variable i by subs[i] (all subs share a ring).
    Polynomial compose(const std::vector<Polynomial>& subs) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Apply f to every exponent vector; colliding terms are summed.
    Polynomial map_monomials(const std::function<MultiIndex(const MultiIndex&)>& f, std::size_t new_nvars) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Default names are z1..zm.
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_same_ring(const Polynomial& o) const;
    void add_term(const MultiIndex& e, const Scalar& c);

    Field field_;
    std::size_t nvars_;
    TermMap terms_;
};

std::vector<std::string> domain_names(std::size_t m);   // z1..zm
std::vector<std::string> ambient_names(std::size_t n);  // x0..x{n-1}

/// Multivariate division by one divisor in grlex order: f = q*g + r, where
/// no term of r is divisible by the leading monomial of g.
std::pair<Polynomial, Polynomial> divide(const Polynomial& f, const Polynomial& g);

/// Throws DivisibilityError unless g | f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Monic lcm; lcm with 0 is 0.
Polynomial lcm(const Polynomial& f, const Polynomial& g);

/// Hasse derivative D^gamma f = sum_{alpha >= gamma} binom(alpha, gamma) a_alpha z^(alpha - gamma).
Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& gamma);
/// Iterated ordinary partial derivative.
Polynomial partial_derivative(const Polynomial& f, const MultiIndex& gamma);

/// Largest e with g^e | f (g non-constant, f nonzero).
unsigned multiplicity(const Polynomial& g, const Polynomial& f);

}  // namespace nevan
