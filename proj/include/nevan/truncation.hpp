#pragma once

// Radicals, higher p^s-radicals, square-free parts and truncated counting.
// Everything is built from gcd/lcm and Hasse derivatives; nothing here
// factors a polynomial into irreducibles.

#include <cstdint>
#include <optional>

#include "nevan/nevanlinna.hpp"

namespace nevan {

/// Truncation level l >= 1, or infinity (no truncation).
class TruncationLevel {
public:
    /// Throws InputError for l = 0.
    explicit TruncationLevel(std::uint64_t l);
    static TruncationLevel infinite() { return TruncationLevel(); }

    bool is_infinite() const noexcept { return !level_; }
    std::uint64_t value() const;
    std::string str() const;

private:
    TruncationLevel() = default;
    std::optional<std::uint64_t> level_;
};

/// R(f) = lcm_j f / gcd(f, D^{e_j} f), monic.
Polynomial radical(const Polynomial& f);

/// R_{p^s}(f) by the characteristic-p recursion. Throws InputError in
/// characteristic 0, InseparableError if the intermediate G is not a p^s-th
/// power (f has a factor that is inseparable over the coefficient field).
Polynomial higher_radical(const Polynomial& f, unsigned s);

/// Smallest s with p^s > total degree of f.
unsigned stabilization_index(const Polynomial& f);

/// Square-free part: R(f) in characteristic 0, R_{p^{s*}}(f) with p^{s*} > deg f otherwise.
Polynomial squarefree_part(const Polynomial& f);

/// gcd(f, S^l) for square-free S, by l rounds of gcd extraction.
Polynomial truncated_part(const Polynomial& f, const Polynomial& squarefree, std::uint64_t l);

/// gcd(f, S(f)^l); f itself for l = infinity.
Polynomial truncation_polynomial(const Polynomial& f, const TruncationLevel& l);

/// N^{(l)}_f(0, r).
Rational truncated_count(const Polynomial& f, const Rational& rho, const TruncationLevel& l);

/// q-th root of a monic q-th power in characteristic p (q a power of p).
std::optional<Polynomial> pth_power_root(const Polynomial& g, std::uint64_t q);

}  // namespace nevan
