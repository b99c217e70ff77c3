#pragma once

// End-to-end evaluation of a scenario: the untruncated second main theorem
// ("smt"), the truncated second main theorem over I_d(V) ("truncated_smt")
// in both of its coefficient readings, the weighted counting claim used in
// its proof, the first main theorem, and, for hyperplanes in P^n, the
// classical hyperplane form for comparison.
//
// Every function evaluated here is piecewise linear in rho with finitely many
// breakpoints, all of which are known. Boundedness over rho >= 0 is therefore
// decided exactly: evaluate at 0, at every breakpoint and at two points past
// the last one, and read off the tail slope.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nevan/nochka.hpp"
#include "nevan/scenario.hpp"
#include "nevan/wronskian.hpp"

namespace nevan {

struct RunOptions {
    std::optional<std::vector<Rational>> grid;  // overrides the scenario grid
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> degree_bound;
    bool strict = false;       // an undetermined position certificate is fatal
    unsigned spot_checks = 5;  // report cells recomputed through the isolated operations
};

/// Artifacts computed once, before any radius is evaluated.
struct Pipeline {
    std::size_t q = 0, N = 0, n = 0, M = 0;
    unsigned d = 1;
    PositionReport position;
    std::vector<Polynomial> composed;  // Q_i(f~)
    std::vector<unsigned> lift;        // d / d_i

    bool truncated = false;            // truncated_smt artifacts below are present
    std::size_t H = 0;                 // H_d(V)
    std::size_t k = 0;                 // rank f
    std::optional<unsigned> s;         // index of non-degeneracy (characteristic p)
    std::uint64_t kappa0 = 0;
    std::optional<NochkaWeights> weights;
    std::optional<WronskianCertificate> wronskian;
    std::vector<Polynomial> truncated_parts;         // gcd(Q_i(f~), S^kappa0)
    std::vector<Polynomial> lifted_truncated_parts;  // same for Q_i(f~)^(d/d_i)

    bool hyperplane_form = false;  // V = P^n, all degrees 1
    std::uint64_t hyperplane_a = 0;

    std::vector<std::string> notes;
};

/// One radius. Optional cells are absent when the corresponding check is off.
struct Row {
    Rational rho, T;
    std::vector<Rational> N, m, fmt;
    std::vector<Rational> Ntrunc;  // empty unless truncated
    std::optional<Rational> lhsA, lhsB, rhs, rhs_sigma, defectA, defectB, defectB_sigma, claim_defect;
    std::optional<Rational> smt_lhs, smt_rhs, smt_defect;
    std::optional<Rational> hyp_lhs, hyp_rhs, hyp_defect;
};

/// Exact boundedness of an excess function e(rho) (left side minus right
/// side of an inequality that should hold up to O(1)) over rho >= 0.
struct Verdict {
    std::string name;
    Rational last_breakpoint;  // rho*: e is affine on [rho*, infinity)
    Rational window_from, window_to;
    Rational tail_slope;       // slope of e past rho*
    Rational tail_value;       // e(window_to)
    bool bounded = false;      // tail_slope <= 0
    bool constant_tail = false;
    std::optional<Rational> constant;  // sup of e over rho >= 0 when bounded: the O(1) term
};

enum class RunStatus { certified, undetermined, violated };
std::string to_string(RunStatus s);

struct TheoremReport {
    std::string scenario;
    std::uint64_t seed = 0;
    Pipeline pipeline;
    std::vector<Row> rows;
    std::vector<Verdict> verdicts;
    std::vector<Rational> fmt_constants;
    std::vector<Rational> breakpoints;      // every breakpoint used for certification
    std::optional<bool> hyperplane_agrees;  // truncated variant B vs hyperplane form, cell for cell
    std::optional<std::string> hyperplane_mismatch;
    std::size_t spot_checked = 0;
    RunStatus status = RunStatus::certified;

    const Verdict* verdict(const std::string& name) const;
};

/// The untruncated second main theorem's preconditions and artifacts only.
/// Throws PreconditionError if position fails (or is undetermined in strict
/// mode), the map is constant, or the theorem's requirements do not hold.
Pipeline build_pipeline(const Scenario& sc, const RunOptions& opt = {});

Row evaluate_row(const Scenario& sc, const Pipeline& p, const Rational& rho);

/// Throws InputError if Q(f~) = 0, ConsistencyError if d T - m - N varies on the grid.
Rational check_fmt(const ProjectiveMap& f, const Hypersurface& q, const std::vector<Rational>& grid);

/// Runs everything the scenario asks for.
TheoremReport run_scenario(const Scenario& sc, const RunOptions& opt = {});

/// Recomputes `count` random cells of the report through the isolated module
/// operations; returns one message per mismatch.
std::vector<std::string> spot_check(const Scenario& sc, const TheoremReport& r, std::uint64_t seed, unsigned count);

}  // namespace nevan
