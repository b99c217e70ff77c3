#pragma once

// Exact linear programming over the rationals: a dense two-phase simplex with
// Bland's rule (no cycling), plus lexicographic optimization over a sequence
// of objectives by restricting to the optimal face after each stage.

#include <optional>
#include <vector>

#include "nevan/valfield.hpp"

namespace nevan {

struct LinearConstraint {
    enum class Sense { le, ge, eq };
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
};

/// Variables are implicitly non-negative.
struct LinearProgram {
    std::size_t nvars = 0;
    std::vector<LinearConstraint> constraints;

    void add(std::vector<Rational> coeffs, LinearConstraint::Sense sense, Rational rhs);
};

/// Minimizes objectives[0], then objectives[1] over the optimal set of the
/// first, and so on. Returns nullopt when the program is infeasible; throws
/// ConsistencyError when a stage is unbounded.
std::optional<std::vector<Rational>> lexicographic_minimize(const LinearProgram& lp,
                                                            const std::vector<std::vector<Rational>>& objectives);

}  // namespace nevan
