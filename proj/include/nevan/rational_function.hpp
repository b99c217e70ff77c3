#pragma once

#include <optional>

#include "nevan/polynomial.hpp"

namespace nevan {

/// num/den with gcd(num, den) = 1 and den monic. Reduced on construction.
class RationalFunction {
public:
    /// Throws DivisionByZero for den = 0.
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    const Field& field() const noexcept { return num_.field(); }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction scaled(const Scalar& c) const;
    RationalFunction inv() const;

    bool operator==(const RationalFunction& o) const = default;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// First derivative D^{e_j} of g/h by the quotient rule.
RationalFunction hasse_first(const RationalFunction& f, std::size_t j);

/// Hasse derivative extended to rational functions along a decomposition
/// chain 0 < e_{j_k} < ... < gamma, each step applying
/// D^{alpha + e_j} = D^{e_j} D^alpha / binom(alpha + e_j, alpha).
/// The canonical chain peels the lowest-index nonzero component off gamma
/// first; if a step's binomial vanishes in the field, every other chain is
/// searched before InputError("inadmissible multi-index") is thrown.
/// Polynomial inputs (constant denominator) use the defining sum instead.
RationalFunction hasse_derivative(const RationalFunction& f, const MultiIndex& gamma);

/// The chain actually used by hasse_derivative, listed from e_{j} up to gamma;
/// empty optional if no admissible chain exists.
std::optional<std::vector<MultiIndex>> hasse_chain(const MultiIndex& gamma, std::uint32_t characteristic);

}  // namespace nevan
