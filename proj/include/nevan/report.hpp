#pragma once

// Report serialization. CSV has one row per radius with a fixed column order:
//
//   rho, T, N_1, N_trunc_1, m_1, ..., N_q, N_trunc_q, m_q,
//   lhsA, lhsB, rhs, defectA, defectB, claim_defect, fmt_consts,
//   rhs_sigma, defectB_sigma, smt_lhs, smt_rhs, smt_defect,
//   hyp_lhs, hyp_rhs, hyp_defect
//
// Rationals are written "a/b"; cells of checks that were not run are empty;
// fmt_consts holds the q first-main-theorem constants joined by ';'.
// JSON carries the same rows plus every certificate and verdict.

#include <string>

#include "nevan/harness.hpp"

namespace nevan {

std::string to_csv(const TheoremReport& r);
std::string to_json(const TheoremReport& r);

}  // namespace nevan
