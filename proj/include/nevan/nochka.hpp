#pragma once

// Nochka-type weights for hypersurfaces in N-subgeneral position, and the
// subset selection that trades weighted products for a full-rank subset.

#include <functional>
#include <string>
#include <vector>

#include "nevan/valfield.hpp"

namespace nevan {

struct NochkaWeights {
    std::vector<Rational> omega;
    Rational omega_tilde;  // max_i omega_i
    std::size_t q = 0, N = 0, n = 0;

    std::string str() const;
};

/// Weights satisfying
///   (i)   0 < omega_i <= 1,
///   (ii)  sum omega_j = omega~ (q - 2N + n - 1) + n + 1,
///   (iii) (n+1)/(2N-n+1) <= omega~ <= n/N,
///   (iv)  sum over any (N+1)-subset <= n + 1,
/// found as the optimum of the exact linear program that minimizes omega~ and
/// then each omega_i in turn. Throws PreconditionError unless
/// q > 2N - n + 1 and N >= n >= 1; ConsistencyError if infeasible.
NochkaWeights compute_weights(std::size_t q, std::size_t N, std::size_t n);

/// Violated invariants (i)-(iv), one message each; empty when all hold.
std::vector<std::string> weight_violations(const NochkaWeights& w);

/// Rank of the classes indexed by a subset.
using SubsetRank = std::function<std::size_t(const std::vector<std::size_t>&)>;

struct SubsetSelection {
    std::vector<std::size_t> subset;  // R°, increasing
    bool used_fallback = false;       // greedy choice failed, exhaustive search used
};

/// prod_{i in R} E_i^{omega_i} <= prod_{i in S} E_i, decided exactly.
bool weighted_product_le(const NochkaWeights& w, const std::vector<Rational>& E, const std::vector<std::size_t>& R,
                         const std::vector<std::size_t>& S);

/// R° inside R with #R° = rank(R°) = n+1 and the weighted-product inequality.
/// Greedy by descending E with rank filtering, then exhaustive. Throws
/// InputError if some E_i < 1 on R, PreconditionError if rank(R) < n+1,
/// ConsistencyError if no subset satisfies the inequality.
SubsetSelection select_subset(const NochkaWeights& w, const std::vector<Rational>& E, const std::vector<std::size_t>& R,
                              const SubsetRank& rank);

}  // namespace nevan
