#pragma once

// Scenario files: a valued field, a variety, a map into it, hypersurfaces,
// the subgeneral-position index N and a radius grid, read from JSON.
//
//   {
//     "name": "conic_five_lines",
//     "field": {"kind": "padic", "p": 5},
//     "ambient": 2,
//     "domain_vars": 1,
//     "variety": {"generators": ["x0*x2 - x1^2"], "dimension": 1},
//     "map": ["z^2", "z", "1"],
//     "hypersurfaces": ["x0", "x2", "x0 - 3*x1 + 2*x2", ...],
//     "N": 2,
//     "degree": 2,                                      (optional, default lcm of degrees)
//     "grid": {"from": "0", "to": "12", "step": "1/2"}, (or a list of rationals)
//     "degree_bound": 6,                                (optional)
//     "seed": 7,                                        (optional)
//     "checks": ["smt", "truncated_smt"]                (optional, default both)
//   }
//
// Rationals are strings "a/b" (plain JSON integers are accepted too).
// "variety" may be omitted for the whole projective space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nevan/projgeom.hpp"

namespace nevan {

enum class Check { smt, truncated_smt };
std::string to_string(Check c);

struct Scenario {
    std::string name;
    Field field;
    Variety variety;
    ProjectiveMap map;
    std::vector<Hypersurface> hypersurfaces;
    std::size_t N = 0;
    std::optional<unsigned> degree;  // common degree override
    std::vector<Rational> grid;
    std::optional<unsigned> degree_bound;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    std::size_t q() const noexcept { return hypersurfaces.size(); }
    std::size_t n() const noexcept { return variety.dimension(); }
    bool runs(Check c) const;
    /// lcm of the degrees, or the override; throws InputError if the
    /// override is not a multiple of every degree.
    unsigned common_degree() const;
};

/// Parses scenario JSON. `origin` prefixes diagnostics (usually the path).
/// Throws ParseError (JSON syntax or polynomial grammar, with line/column or
/// column inside the named field) or InputError (schema and invariants).
Scenario parse_scenario(const std::string& text, const std::string& origin = "scenario");
Scenario load_scenario(const std::string& path);

/// "a:b:step" -> a, a+step, ..., up to and including b when reached exactly.
std::vector<Rational> parse_grid(const std::string& spec);
std::vector<Rational> make_grid(const Rational& from, const Rational& to, const Rational& step);

}  // namespace nevan
