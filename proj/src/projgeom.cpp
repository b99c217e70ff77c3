#include "nevan/projgeom.hpp"

#include <algorithm>
#include <numeric>

namespace nevan {

// ---------------------------------------------------------------- Hypersurface

Hypersurface::Hypersurface(Polynomial q) : q_(std::move(q)), degree_(0) {
    if (q_.is_zero()) throw InputError("a hypersurface needs a nonzero polynomial");
    if (!q_.is_homogeneous()) throw InputError("hypersurface polynomial is not homogeneous: " + q_.str(ambient_names(q_.nvars())));
    if (q_.total_degree() < 1) throw InputError("hypersurface polynomial must have positive degree");
    degree_ = static_cast<unsigned>(q_.total_degree());
    bool first = true;
    for (const auto& [e, c] : q_.terms()) {
        Rational v = q_.field().logabs(c).value();
        if (first || v > norm_) norm_ = v;
        first = false;
    }
}

Hypersurface Hypersurface::lifted(unsigned d) const {
    if (d == 0 || d % degree_) throw InputError("cannot lift degree " + std::to_string(degree_) + " to degree " + std::to_string(d));
    return Hypersurface(q_.pow(d / degree_));
}

Hypersurface Hypersurface::scaled(const Scalar& c) const { return Hypersurface(q_.scaled(c)); }

std::string Hypersurface::str() const { return q_.str(ambient_names(q_.nvars())); }

// ---------------------------------------------------------------- Hilbert data

namespace {

std::vector<MultiIndex> descending_monomials(std::size_t nvars, unsigned d) {
    auto v = indices_of_degree(nvars, d);
    std::reverse(v.begin(), v.end());
    return v;
}

std::map<MultiIndex, std::size_t> column_index(const std::vector<MultiIndex>& monomials) {
    std::map<MultiIndex, std::size_t> idx;
    for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
    return idx;
}

Vector coefficient_vector(const Polynomial& q, const std::map<MultiIndex, std::size_t>& idx, std::size_t ncols) {
    Vector v(ncols, q.field().zero());
    for (const auto& [e, c] : q.terms()) {
        auto it = idx.find(e);
        if (it == idx.end()) throw InputError("form has a term outside the expected degree");
        v[it->second] = c;
    }
    return v;
}

/// Rows g * x^beta spanning the degree-d piece of the ideal.
Matrix ideal_piece(const Field& field, std::size_t M, const std::vector<Polynomial>& gens, unsigned d,
                   const std::vector<MultiIndex>& monomials) {
    const auto idx = column_index(monomials);
    Matrix m(field, 0, monomials.size());
    for (const auto& g : gens) {
        const long e = g.total_degree();
        if (e < 0 || e > static_cast<long>(d)) continue;
        for (const auto& beta : indices_of_degree(M + 1, d - static_cast<unsigned>(e)))
            m.append_row(coefficient_vector(g.shifted(beta, field.one()), idx, monomials.size()));
    }
    return m;
}

}  // namespace

Vector HilbertData::coefficients(const Polynomial& q) const {
    return coefficient_vector(q, column_index(monomials), monomials.size());
}

Vector HilbertData::class_of(const Polynomial& q) const {
    Vector reduced = ideal->reduce(coefficients(q));
    Vector out;
    out.reserve(standard.size());
    for (auto c : standard) out.push_back(reduced[c]);
    return out;
}

std::size_t ideal_piece_rank(const Field& field, std::size_t M, const std::vector<Polynomial>& gens, unsigned d) {
    return rank(ideal_piece(field, M, gens, d, descending_monomials(M + 1, d)));
}

std::size_t class_rank(const HilbertData& h, const std::vector<const Hypersurface*>& qs) {
    if (qs.empty()) return 0;
    Matrix m(qs.front()->field(), 0, h.value());
    for (const auto* q : qs) {
        if (q->degree() != h.degree) throw InputError("class rank needs forms of degree " + std::to_string(h.degree));
        m.append_row(h.class_of(q->poly()));
    }
    return rank(m);
}

// ---------------------------------------------------------------- Variety

Variety::Variety(Field field, std::size_t ambient_dim, std::vector<Polynomial> generators, std::size_t dimension)
    : field_(std::move(field)), ambient_(ambient_dim), generators_(std::move(generators)), dimension_(dimension) {
    if (dimension_ > ambient_) throw InputError("variety dimension exceeds the ambient dimension");
    for (const auto& g : generators_) {
        if (g.field() != field_ || g.nvars() != ambient_ + 1)
            throw InputError("variety generator lives in a different ring");
        if (g.is_zero() || !g.is_homogeneous()) throw InputError("variety generators must be nonzero homogeneous polynomials");
    }
}

Variety Variety::projective_space(Field field, std::size_t M) {
    return Variety(std::move(field), M, {}, M);
}

Variety::Variety(const Variety& o)
    : field_(o.field_), ambient_(o.ambient_), generators_(o.generators_), dimension_(o.dimension_) {}

Variety& Variety::operator=(const Variety& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_);
    field_ = o.field_;
    ambient_ = o.ambient_;
    generators_ = o.generators_;
    dimension_ = o.dimension_;
    cache_.clear();
    return *this;
}

const HilbertData& Variety::hilbert(unsigned d) const {
    if (d == 0) throw InputError("Hilbert function needs d >= 1");
    std::scoped_lock lock(mutex_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
    auto data = std::make_unique<HilbertData>();
    data->degree = d;
    data->monomials = descending_monomials(ambient_ + 1, d);
    data->ideal = std::make_shared<Echelon>(row_reduce(ideal_piece(field_, ambient_, generators_, d, data->monomials)));
    std::vector<bool> pivot(data->monomials.size(), false);
    for (auto c : data->ideal->pivots) pivot[c] = true;
    for (std::size_t c = 0; c < data->monomials.size(); ++c) {
        if (pivot[c]) continue;
        data->standard.push_back(c);
        data->basis.emplace_back(Polynomial::monomial(field_, data->monomials[c], field_.one()));
    }
    return *cache_.emplace(d, std::move(data)).first->second;
}

std::optional<std::string> Variety::dimension_warning() const {
    unsigned start = 1;
    for (const auto& g : generators_) start += static_cast<unsigned>(g.total_degree());
    std::vector<Integer> values;
    for (unsigned d = start; d <= start + dimension_ + 1; ++d) values.emplace_back(static_cast<unsigned long>(hilbert(d).value()));
    // after n differences the sequence is constant (the degree), after n+1 it vanishes
    for (std::size_t k = 0; k < dimension_; ++k)
        for (std::size_t i = 0; i + 1 < values.size() - k; ++i) values[i] = values[i + 1] - values[i];
    const Integer lead0 = values[0], lead1 = values[1];
    if (lead0 != lead1 || lead0 <= 0)
        return "declared dimension " + std::to_string(dimension_) +
               " does not match the growth of the Hilbert function from d = " + std::to_string(start);
    return std::nullopt;
}

std::size_t hilbert_function(const Variety& v, unsigned d) { return v.hilbert(d).value(); }

// ---------------------------------------------------------------- ProjectiveMap

ProjectiveMap::ProjectiveMap(std::vector<Polynomial> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw InputError("a projective map needs at least two coordinates");
    bool any = false;
    for (const auto& c : coords_) {
        if (c.field() != coords_.front().field() || c.nvars() != coords_.front().nvars())
            throw InputError("map coordinates live in different rings");
        any = any || !c.is_zero();
    }
    if (!any) throw InputError("all coordinates of the map vanish");
    Polynomial g(coords_.front().field(), coords_.front().nvars());
    for (const auto& c : coords_) g = gcd(g, c);
    if (!g.is_constant()) throw InputError("map coordinates share the factor " + g.str() + "; not a reduced representation");
}

ProjectiveMap ProjectiveMap::reduce(std::vector<Polynomial> coords) {
    if (coords.empty()) throw InputError("a projective map needs coordinates");
    Polynomial g(coords.front().field(), coords.front().nvars());
    for (const auto& c : coords) g = gcd(g, c);
    if (g.is_zero()) throw InputError("all coordinates of the map vanish");
    for (auto& c : coords) c = exact_div(c, g);
    return ProjectiveMap(std::move(coords));
}

bool ProjectiveMap::is_constant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& c) { return c.is_constant(); });
}

void ProjectiveMap::require_in(const Variety& v) const {
    if (v.ambient_dim() != ambient_dim() || v.field() != field())
        throw InputError("map and variety live in different projective spaces");
    for (const auto& g : v.generators())
        if (!evaluate(g, *this).is_zero())
            throw InputError("map does not lie on the variety: generator " + g.str(ambient_names(g.nvars())) +
                             " does not vanish");
}

std::string ProjectiveMap::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ", " : "") + coords_[i].str();
    return out + ")";
}

Polynomial evaluate(const Polynomial& q, const ProjectiveMap& f) {
    if (q.nvars() != f.coords().size()) throw InputError("hypersurface and map have different ambient dimensions");
    if (q.field() != f.field()) throw InputError("hypersurface and map are over different fields");
    return q.compose(f.coords());
}

Polynomial evaluate(const Hypersurface& q, const ProjectiveMap& f) { return evaluate(q.poly(), f); }

// ---------------------------------------------------------------- map functions

Rational map_characteristic_T(const ProjectiveMap& f, const Rational& rho) {
    return NewtonPolygon::joint(f.coords()).envelope(rho);
}

namespace {

Polynomial nonvanishing_composite(const ProjectiveMap& f, const Hypersurface& q) {
    Polynomial c = evaluate(q, f);
    if (c.is_zero()) throw InputError("map lies in hypersurface " + q.str());
    return c;
}

}  // namespace

Rational map_proximity(const ProjectiveMap& f, const Hypersurface& q, const Rational& rho) {
    const Polynomial c = nonvanishing_composite(f, q);
    return Rational(q.degree()) * map_characteristic_T(f, rho) + q.norm() - gauss_norm(c, rho).value();
}

Rational map_counting(const ProjectiveMap& f, const Hypersurface& q, const Rational& rho, const TruncationLevel& l) {
    return truncated_count(nonvanishing_composite(f, q), rho, l);
}

// ---------------------------------------------------------------- position

std::string to_string(PositionStatus s) {
    switch (s) {
        case PositionStatus::certified: return "certified";
        case PositionStatus::fails: return "fails";
        case PositionStatus::undetermined: return "undetermined";
    }
    return "?";
}

bool PositionReport::all_certified() const {
    return std::all_of(subsets.begin(), subsets.end(),
                       [](const SubsetCertificate& c) { return c.status == PositionStatus::certified; });
}

bool PositionReport::any_fails() const {
    return std::any_of(subsets.begin(), subsets.end(),
                       [](const SubsetCertificate& c) { return c.status == PositionStatus::fails; });
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

unsigned default_degree_bound(const Variety& v, const std::vector<const Hypersurface*>& qs) {
    unsigned sum = 0;
    for (const auto& g : v.generators()) sum += static_cast<unsigned>(g.total_degree());
    for (const auto* q : qs) sum += q->degree();
    return 2 * sum + 2;
}

SubsetCertificate certify_empty_intersection(const Variety& v, const std::vector<const Hypersurface*>& qs,
                                             std::optional<unsigned> degree_bound) {
    SubsetCertificate cert;
    const std::size_t M = v.ambient_dim();
    std::vector<Polynomial> gens = v.generators();
    for (const auto* q : qs) {
        if (q->ambient_dim() != M || q->field() != v.field())
            throw InputError("hypersurface " + q->str() + " is not in the variety's ambient space");
        gens.push_back(q->poly());
    }
    const bool linear = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.total_degree() == 1; });
    if (linear) {
        const auto monomials = descending_monomials(M + 1, 1);
        Matrix m = ideal_piece(v.field(), M, gens, 1, monomials);
        const auto kernel = nullspace(m);
        if (kernel.empty()) {
            cert.status = PositionStatus::certified;
            cert.degree = 1;
        } else {
            // columns are x0..xM in descending grlex, i.e. in order
            cert.status = PositionStatus::fails;
            cert.common_zero = kernel.front();
        }
        return cert;
    }
    const unsigned bound = degree_bound.value_or(default_degree_bound(v, qs));
    for (unsigned D = 1; D <= bound; ++D) {
        const auto monomials = descending_monomials(M + 1, D);
        if (rank(ideal_piece(v.field(), M, gens, D, monomials)) == monomials.size()) {
            cert.status = PositionStatus::certified;
            cert.degree = D;
            return cert;
        }
    }
    cert.status = PositionStatus::undetermined;
    return cert;
}

PositionReport position_check(const Variety& v, const std::vector<Hypersurface>& qs, std::size_t N,
                              std::optional<unsigned> degree_bound) {
    if (!(qs.size() >= N + 1 && N + 1 >= v.dimension() + 1))
        throw PreconditionError("position check needs q >= N+1 >= n+1 (q = " + std::to_string(qs.size()) +
                                ", N = " + std::to_string(N) + ", n = " + std::to_string(v.dimension()) + ")");
    PositionReport report;
    for (const auto& idx : subsets_of_size(qs.size(), N + 1)) {
        std::vector<const Hypersurface*> sub;
        for (auto i : idx) sub.push_back(&qs[i]);
        SubsetCertificate c = certify_empty_intersection(v, sub, degree_bound);
        c.subset = idx;
        report.subsets.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------- norm comparison

NormComparison norm_comparison(const Variety& v, const std::vector<Hypersurface>& subset, const ProjectiveMap& f,
                               const std::vector<Rational>& grid) {
    if (subset.empty()) throw PreconditionError("norm comparison needs a nonempty subset");
    const unsigned d = subset.front().degree();
    std::vector<const Hypersurface*> ptrs;
    for (const auto& q : subset) {
        if (q.degree() != d) throw PreconditionError("norm comparison needs hypersurfaces of a common degree");
        ptrs.push_back(&q);
    }
    if (certify_empty_intersection(v, ptrs, std::nullopt).status != PositionStatus::certified)
        throw PreconditionError("subset has no certificate that its intersection with V is empty");

    std::vector<Polynomial> composites;
    NormComparison out;
    out.upper = subset.front().norm();
    for (const auto& q : subset) {
        composites.push_back(evaluate(q, f));
        if (q.norm() > out.upper) out.upper = q.norm();
    }
    const NewtonPolygon fpoly = NewtonPolygon::joint(f.coords());
    const NewtonPolygon qpoly = NewtonPolygon::joint(composites);
    auto diff = [&](const Rational& rho) -> Rational { return qpoly.envelope(rho) - Rational(d) * fpoly.envelope(rho); };

    std::vector<Rational> breaks = fpoly.breakpoints();
    breaks.insert(breaks.end(), qpoly.breakpoints().begin(), qpoly.breakpoints().end());
    std::sort(breaks.begin(), breaks.end());
    const Rational lo = breaks.empty() ? Rational(0) : breaks.front();
    const Rational hi = breaks.empty() ? Rational(0) : breaks.back();
    out.tail = diff(hi + 1);
    out.bounded = diff(hi + 2) == out.tail && diff(lo - 1) == diff(lo - 2);

    std::vector<Rational> points = grid;
    points.insert(points.end(), breaks.begin(), breaks.end());
    if (points.empty()) points.push_back(0);
    out.observed_lower = diff(points.front());
    for (const auto& rho : points) {
        Rational v2 = diff(rho);
        if (v2 < out.observed_lower) out.observed_lower = v2;
    }
    return out;
}

// ---------------------------------------------------------------- completion

std::vector<Hypersurface> complete_to_full_rank(const Variety& v, const std::vector<Hypersurface>& qs, unsigned d,
                                                std::uint64_t seed, unsigned retries) {
    if (qs.empty()) throw PreconditionError("completion needs at least one hypersurface");
    const HilbertData& h = v.hilbert(d);
    const std::size_t H = h.value(), n = v.dimension();
    if (H < n + 1) throw PreconditionError("H_V(d) < n + 1; nothing to complete");
    const std::size_t count = H - n - 1;

    std::vector<Vector> classes;
    for (const auto& q : qs) {
        if (q.degree() != d) throw PreconditionError("completion needs hypersurfaces of degree " + std::to_string(d));
        classes.push_back(h.class_of(q.poly()));
    }
    std::vector<std::vector<std::size_t>> full_subsets;
    for (const auto& idx : subsets_of_size(qs.size(), n + 1)) {
        Matrix m(v.field(), 0, H);
        for (auto i : idx) m.append_row(classes[i]);
        if (rank(m) == n + 1) full_subsets.push_back(idx);
    }

    for (unsigned attempt = 0; attempt < retries; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        const int spread = 2 + 2 * static_cast<int>(attempt);
        std::vector<Vector> ts;
        for (std::size_t j = 0; j < count; ++j) {
            Vector c;
            for (std::size_t k = 0; k < H; ++k) c.push_back(v.field().random_element(rng, spread));
            ts.push_back(std::move(c));
        }
        bool ok = true;
        for (const auto& idx : full_subsets) {
            Matrix m(v.field(), 0, H);
            for (auto i : idx) m.append_row(classes[i]);
            for (const auto& t : ts) m.append_row(t);
            if (rank(m) != H) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<Hypersurface> out;
        for (const auto& t : ts) {
            Polynomial p(v.field(), v.ambient_dim() + 1);
            for (std::size_t k = 0; k < H; ++k) p += h.basis[k].poly().scaled(t[k]);
            if (p.is_zero()) {
                ok = false;
                break;
            }
            out.emplace_back(std::move(p));
        }
        if (ok) return out;
    }
    throw ConsistencyError("completion not found after " + std::to_string(retries) + " attempts");
}

}  // namespace nevan
