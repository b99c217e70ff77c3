#pragma once

// Projective geometry by graded linear algebra: hypersurfaces, varieties given
// by homogeneous generators, Hilbert functions and bases of the degree-d
// quotient, reduced representations of maps, subgeneral-position
// certificates, norm comparisons and completion by generic hypersurfaces.
// Also the map-level Nevanlinna functions T, m and N^(l).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nevan/linalg.hpp"
#include "nevan/truncation.hpp"

namespace nevan {

/// Nonzero homogeneous polynomial in x0..xM.
class Hypersurface {
public:
    /// Throws InputError unless q is nonzero and homogeneous of positive degree.
    explicit Hypersurface(Polynomial q);

    const Polynomial& poly() const noexcept { return q_; }
    const Field& field() const noexcept { return q_.field(); }
    unsigned degree() const noexcept { return degree_; }
    std::size_t ambient_dim() const noexcept { return q_.nvars() - 1; }
    /// log ||Q|| = max_I logabs(a_I)
    const Rational& norm() const noexcept { return norm_; }

    /// Q^(d / deg Q); throws InputError unless deg Q divides d.
    Hypersurface lifted(unsigned d) const;
    Hypersurface scaled(const Scalar& c) const;

    std::string str() const;

private:
    Polynomial q_;
    unsigned degree_;
    Rational norm_;
};

/// Degree-d slice of the ideal and a monomial basis of the quotient.
struct HilbertData {
    unsigned degree = 0;
    std::vector<MultiIndex> monomials;  // columns, descending grlex
    std::shared_ptr<const Echelon> ideal;
    std::vector<std::size_t> standard;  // non-pivot columns
    std::vector<Hypersurface> basis;    // one monomial per standard column

    /// H_V(d)
    std::size_t value() const noexcept { return standard.size(); }
    /// Coefficients of a degree-d form over `monomials`.
    Vector coefficients(const Polynomial& q) const;
    /// Coordinates of the class [q] in I_d(V) with respect to `basis`.
    Vector class_of(const Polynomial& q) const;
};

class Variety {
public:
    /// Throws InputError for non-homogeneous or zero generators, or a dimension above M.
    Variety(Field field, std::size_t ambient_dim, std::vector<Polynomial> generators, std::size_t dimension);
    static Variety projective_space(Field field, std::size_t M);

    Variety(const Variety& o);
    Variety& operator=(const Variety& o);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    /// Cached; safe to call concurrently.
    const HilbertData& hilbert(unsigned d) const;

    /// Compares the declared dimension with the degree of the Hilbert
    /// polynomial (finite differences at large d); a message on mismatch.
    std::optional<std::string> dimension_warning() const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Polynomial> generators_;
    std::size_t dimension_;
    mutable std::mutex mutex_;
    mutable std::map<unsigned, std::unique_ptr<HilbertData>> cache_;
};

/// H_V(d); throws InputError for d = 0.
std::size_t hilbert_function(const Variety& v, unsigned d);

/// Rank of the degree-d piece of the ideal generated by `gens` (in M+1 variables).
std::size_t ideal_piece_rank(const Field& field, std::size_t M, const std::vector<Polynomial>& gens, unsigned d);

/// rank_F of the classes [Q_i] in I_d(V); all Q_i of degree d.
std::size_t class_rank(const HilbertData& h, const std::vector<const Hypersurface*>& qs);

/// Reduced representation (f_0, ..., f_M) of a map F^m -> P^M.
class ProjectiveMap {
public:
    /// Throws InputError if all coordinates vanish or they share a non-constant factor.
    explicit ProjectiveMap(std::vector<Polynomial> coords);
    /// Divides out the common gcd first.
    static ProjectiveMap reduce(std::vector<Polynomial> coords);

    const std::vector<Polynomial>& coords() const noexcept { return coords_; }
    const Field& field() const noexcept { return coords_.front().field(); }
    std::size_t domain_vars() const noexcept { return coords_.front().nvars(); }
    std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
    /// All coordinates proportional, i.e. the map is a single point.
    bool is_constant() const;

    /// Throws InputError unless every generator of v vanishes on the map.
    void require_in(const Variety& v) const;

    std::string str() const;

private:
    std::vector<Polynomial> coords_;
};

/// Q(f~) = sum a_I f^I; throws InputError on dimension mismatch.
Polynomial evaluate(const Hypersurface& q, const ProjectiveMap& f);
Polynomial evaluate(const Polynomial& q, const ProjectiveMap& f);

/// T_f(r) = log ||f~||_r = max_i log |f_i|_r.
Rational map_characteristic_T(const ProjectiveMap& f, const Rational& rho);
/// m_f(Q, r) = d log||f~||_r + log||Q|| - log|Q(f~)|_r; throws InputError if Q(f~) = 0.
Rational map_proximity(const ProjectiveMap& f, const Hypersurface& q, const Rational& rho);
/// N_f^(l)(Q, r) = N^(l)_{Q(f~)}(0, r); throws InputError if Q(f~) = 0.
Rational map_counting(const ProjectiveMap& f, const Hypersurface& q, const Rational& rho,
                      const TruncationLevel& l = TruncationLevel::infinite());

enum class PositionStatus { certified, fails, undetermined };
std::string to_string(PositionStatus s);

struct SubsetCertificate {
    std::vector<std::size_t> subset;
    PositionStatus status = PositionStatus::undetermined;
    unsigned degree = 0;       // certificate degree D when certified
    Vector common_zero;        // a point of the intersection when it fails
};

struct PositionReport {
    std::vector<SubsetCertificate> subsets;
    bool all_certified() const;
    bool any_fails() const;
};

/// Default search bound 2 * (sum of generator degrees) + 2.
unsigned default_degree_bound(const Variety& v, const std::vector<const Hypersurface*>& qs);

/// Whether V meets the common zero set of qs: tries D = 1..bound for a degree
/// where the ideal fills all forms of degree D. Linear inputs are decided
/// exactly by the hyperplane fast path.
SubsetCertificate certify_empty_intersection(const Variety& v, const std::vector<const Hypersurface*>& qs,
                                             std::optional<unsigned> degree_bound);

/// N-subgeneral position: every (N+1)-subset certified. Throws
/// PreconditionError unless q >= N+1 >= n+1.
PositionReport position_check(const Variety& v, const std::vector<Hypersurface>& qs, std::size_t N,
                              std::optional<unsigned> degree_bound = std::nullopt);

struct NormComparison {
    Rational observed_lower;  // min over rho of max_i log|Q_i(f~)| - d log||f~||
    Rational upper;           // max_i log||Q_i||, valid at every radius
    Rational tail;            // value past the last breakpoint
    bool bounded = false;     // the difference is constant past the last breakpoint
};

/// Throws PreconditionError if the subset lacks an emptiness certificate or
/// the degrees differ.
NormComparison norm_comparison(const Variety& v, const std::vector<Hypersurface>& subset, const ProjectiveMap& f,
                               const std::vector<Rational>& grid);

/// H_V(d) - n - 1 hypersurfaces T_j (random combinations of the degree-d
/// basis, seeded) such that every subset R of qs with rank #R = n+1
/// completes to rank H_V(d). Throws ConsistencyError after `retries` failures.
std::vector<Hypersurface> complete_to_full_rank(const Variety& v, const std::vector<Hypersurface>& qs, unsigned d,
                                                std::uint64_t seed, unsigned retries = 16);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace nevan
