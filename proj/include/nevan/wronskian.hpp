#pragma once

// rank f, non-degeneracy over I_d(V), the d-th index of non-degeneracy,
// kappa_0 and the generalized-Wronskian search.

#include <optional>
#include <vector>

#include "nevan/projgeom.hpp"

namespace nevan {

/// rank of (D^gamma f_0, ..., D^gamma f_M) over |gamma| <= 1, minus one.
std::size_t rank_f(const ProjectiveMap& f);

/// Composites A_j(f~) for the monomial basis A_j of I_d(V).
std::vector<Polynomial> basis_composites(const ProjectiveMap& f, const Variety& v, unsigned d);

/// Rank over the rational-function field of (D^gamma A_j(f~)) for |gamma| <= 1,
/// minus one; bounds rank f from above.
std::size_t composite_first_order_rank(const std::vector<Polynomial>& composites);

struct NondegeneracyResult {
    bool nondegenerate = false;
    std::optional<Hypersurface> witness;  // nonzero class with Q(f~) = 0 when degenerate
};

NondegeneracyResult nondegeneracy_check(const ProjectiveMap& f, const Variety& v, unsigned d);

/// Smallest s >= 1 such that the composites stay independent over the field
/// of fractions of polynomials in z^(p^s); nullopt in characteristic 0.
/// Throws PreconditionError when f is degenerate over I_d(V).
std::optional<unsigned> index_s(const ProjectiveMap& f, const Variety& v, unsigned d);

/// p^(s-1) (H - k) in characteristic p > 0, H - k in characteristic 0.
/// Throws InputError unless H >= 1 and k <= H - 1 (and s >= 1 when p > 0).
std::uint64_t kappa0(std::size_t H, std::size_t k, std::optional<unsigned> s, std::uint32_t p);

struct WronskianCertificate {
    std::vector<MultiIndex> gammas;  // |gamma^1| <= ... <= |gamma^H|
    Polynomial W;                    // det(D^{gamma^i} A_j(f~)), nonzero
    std::uint64_t gamma_sum = 0;     // sum |gamma^i|
    std::uint64_t kappa0 = 0;
};

/// Candidate multi-indices of total degree <= max_grade: by grade, and inside
/// a grade in descending grlex (so e_1 before e_2).
std::vector<MultiIndex> wronskian_candidates(std::size_t m, std::uint64_t max_grade);

/// det(D^{gamma^i} g_j) recomputed from scratch.
Polynomial wronskian_determinant(const std::vector<Polynomial>& composites, const std::vector<MultiIndex>& gammas);

/// Greedy row selection over wronskian_candidates(m, kappa0). Throws
/// ConsistencyError("Wronskian bound violated") if rank H is not reached.
WronskianCertificate find_wronskian(const std::vector<Polynomial>& composites, std::uint64_t kappa0);
WronskianCertificate find_wronskian(const ProjectiveMap& f, const Variety& v, unsigned d, std::uint64_t kappa0);

}  // namespace nevan
