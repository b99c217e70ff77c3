#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nevan/valfield.hpp"

namespace nevan {

/// Exponent vector gamma = (gamma_1, ..., gamma_m).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
    MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    /// e_i in nvars variables.
    static MultiIndex unit(std::size_t nvars, std::size_t i);

    std::size_t size() const noexcept { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

    /// |gamma|
    std::uint64_t total() const noexcept;
    bool is_zero() const noexcept;

    /// Componentwise alpha >= beta.
    bool dominates(const MultiIndex& o) const;
    /// Requires dominates(o).
    MultiIndex operator-(const MultiIndex& o) const;
    MultiIndex operator+(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const = default;
    /// Plain lexicographic order (for use as a map key only).
    auto operator<=>(const MultiIndex& o) const = default;

    std::string str() const;

private:
    std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order: total degree first, then the first
/// differing exponent decides (larger exponent in an earlier variable is larger).
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// binom(alpha, beta) = prod_i binom(alpha_i, beta_i); 0 unless alpha >= beta.
Integer binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// gamma! = prod_i gamma_i!
Integer factorial(const MultiIndex& gamma);

/// All multi-indices in nvars variables of total degree `degree`, ascending in grlex.
std::vector<MultiIndex> indices_of_degree(std::size_t nvars, std::uint64_t degree);

/// All multi-indices with total degree <= max_degree, ascending in grlex.
std::vector<MultiIndex> indices_up_to(std::size_t nvars, std::uint64_t max_degree);

}  // namespace nevan
