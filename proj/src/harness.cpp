#include "nevan/harness.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <thread>

namespace nevan {

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::certified: return "certified";
        case RunStatus::undetermined: return "undetermined";
        case RunStatus::violated: return "violated";
    }
    return "?";
}

const Verdict* TheoremReport::verdict(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return &v;
    return nullptr;
}

namespace {

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::string subset_str(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Pipeline build_pipeline(const Scenario& sc, const RunOptions& opt) {
    Pipeline p;
    p.q = sc.q();
    p.N = sc.N;
    p.n = sc.n();
    p.M = sc.variety.ambient_dim();
    p.d = sc.common_degree();

    if (sc.map.is_constant()) throw PreconditionError("the map is constant");
    if (sc.map.ambient_dim() != p.M) throw InputError("map and variety live in different projective spaces");
    if (auto w = sc.variety.dimension_warning()) p.notes.push_back(*w);

    std::optional<unsigned> bound = opt.degree_bound ? opt.degree_bound : sc.degree_bound;
    p.position = position_check(sc.variety, sc.hypersurfaces, sc.N, bound);
    for (const auto& c : p.position.subsets) {
        if (c.status == PositionStatus::fails) {
            std::string pt;
            for (std::size_t i = 0; i < c.common_zero.size(); ++i) pt += (i ? ":" : "") + c.common_zero[i].str();
            throw PreconditionError("hypersurfaces " + subset_str(c.subset) + " meet V" +
                                    (pt.empty() ? std::string() : " at (" + pt + ")") + "; not in " +
                                    std::to_string(sc.N) + "-subgeneral position");
        }
        if (c.status == PositionStatus::undetermined) {
            std::string msg = "position of hypersurfaces " + subset_str(c.subset) + " undetermined up to degree bound";
            if (opt.strict) throw PreconditionError(msg + " (strict mode)");
            p.notes.push_back(msg);
        }
    }

    for (std::size_t i = 0; i < p.q; ++i) {
        Polynomial c = evaluate(sc.hypersurfaces[i], sc.map);
        if (c.is_zero())
            throw PreconditionError("the image of the map lies in hypersurface " + std::to_string(i) + " (" +
                                    sc.hypersurfaces[i].str() + ")");
        p.composed.push_back(std::move(c));
        p.lift.push_back(p.d / sc.hypersurfaces[i].degree());
    }

    if (!sc.runs(Check::truncated_smt)) return p;

    if (!(p.q + p.n > 2 * p.N + 1))
        throw PreconditionError("truncated_smt needs q > 2N - n + 1 (q = " + std::to_string(p.q) +
                                ", N = " + std::to_string(p.N) + ", n = " + std::to_string(p.n) + ")");
    NondegeneracyResult nd = nondegeneracy_check(sc.map, sc.variety, p.d);
    if (!nd.nondegenerate)
        throw PreconditionError("the map is degenerate over I_" + std::to_string(p.d) + "(V)" +
                                (nd.witness ? ": it lies in " + nd.witness->str() : std::string()));
    p.truncated = true;
    p.H = hilbert_function(sc.variety, p.d);
    p.k = rank_f(sc.map);
    p.s = index_s(sc.map, sc.variety, p.d);
    p.kappa0 = kappa0(p.H, p.k, p.s, sc.field.characteristic());
    p.weights = compute_weights(p.q, p.N, p.n);
    if (auto bad = weight_violations(*p.weights); !bad.empty()) throw ConsistencyError("weights: " + bad.front());
    p.wronskian = find_wronskian(sc.map, sc.variety, p.d, p.kappa0);
    const TruncationLevel level(p.kappa0);
    for (std::size_t i = 0; i < p.q; ++i) {
        p.truncated_parts.push_back(truncation_polynomial(p.composed[i], level));
        p.lifted_truncated_parts.push_back(truncation_polynomial(p.composed[i].pow(p.lift[i]), level));
    }
    p.notes.push_back("the weight bound q > 2N - k + 1 is applied with k = n");

    bool linear = std::all_of(sc.hypersurfaces.begin(), sc.hypersurfaces.end(),
                              [](const Hypersurface& h) { return h.degree() == 1; });
    if (sc.variety.generators().empty() && p.M == p.n && linear && p.d == 1) {
        p.hyperplane_form = true;
        std::uint64_t base = p.n - p.k + 1;
        p.hyperplane_a = sc.field.characteristic() ? ipow(sc.field.characteristic(), *p.s - 1) * base : base;
    }
    return p;
}

Row evaluate_row(const Scenario& sc, const Pipeline& p, const Rational& rho) {
    Row r;
    r.rho = rho;
    r.T = map_characteristic_T(sc.map, rho);
    const long q = static_cast<long>(p.q), N = static_cast<long>(p.N), n = static_cast<long>(p.n);
    Rational sum_over_deg = 0;
    for (std::size_t i = 0; i < p.q; ++i) {
        const Hypersurface& h = sc.hypersurfaces[i];
        Rational Ni = count_N(p.composed[i], rho);
        Rational mi = Rational(h.degree()) * r.T + h.norm() - gauss_norm(p.composed[i], rho).value();
        Rational fi = Rational(h.degree()) * r.T - mi - Ni;
        sum_over_deg += Ni / Rational(h.degree());
        r.N.push_back(Ni);
        r.m.push_back(mi);
        r.fmt.push_back(fi);
    }
    if (sc.runs(Check::smt)) {
        r.smt_lhs = Rational(q - N) * r.T;
        r.smt_rhs = sum_over_deg;
        r.smt_defect = *r.smt_rhs - *r.smt_lhs;
    }
    if (!p.truncated) return r;

    const long H = static_cast<long>(p.H), d = p.d;
    const WronskianCertificate& w = *p.wronskian;
    Rational trunc_sum = 0, weighted_full = 0, weighted_trunc = 0;
    for (std::size_t i = 0; i < p.q; ++i) {
        Rational t = count_N(p.truncated_parts[i], rho);
        r.Ntrunc.push_back(t);
        trunc_sum += t / Rational(sc.hypersurfaces[i].degree());
        const Rational& om = p.weights->omega[i];
        weighted_full += om * Rational(p.lift[i]) * r.N[i];
        weighted_trunc += om * count_N(p.lifted_truncated_parts[i], rho);
    }
    Rational coefA = Rational(q) - frac((2 * N + n - 1) * H, n + 1);
    Rational coefB = Rational(q) - frac((2 * N - n + 1) * H, n + 1);
    r.lhsA = coefA * r.T;
    r.lhsB = coefB * r.T;
    r.rhs = trunc_sum - frac(N * (H - 1), n * d) * rho;
    r.rhs_sigma = trunc_sum - frac(N * static_cast<long>(w.gamma_sum), n * d) * rho;
    r.defectA = *r.rhs - *r.lhsA;
    r.defectB = *r.rhs - *r.lhsB;
    r.defectB_sigma = *r.rhs_sigma - *r.lhsB;
    r.claim_defect = weighted_full - count_N(w.W, rho) - weighted_trunc;

    if (p.hyperplane_form) {
        const TruncationLevel a(p.hyperplane_a);
        Rational s = 0;
        for (const auto& h : sc.hypersurfaces) s += map_counting(sc.map, h, rho, a);
        r.hyp_lhs = Rational(q - 2 * N + n - 1) * r.T;
        r.hyp_rhs = s - frac(N + 1, n + 1) * rho;
        r.hyp_defect = *r.hyp_rhs - *r.hyp_lhs;
    }
    return r;
}

namespace {

std::vector<Row> evaluate_rows(const Scenario& sc, const Pipeline& p, const std::vector<Rational>& pts) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
    const std::size_t chunk = (pts.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    std::vector<std::future<std::vector<Row>>> jobs;
    for (std::size_t lo = 0; lo < pts.size(); lo += std::max<std::size_t>(chunk, 1)) {
        std::size_t hi = std::min(pts.size(), lo + std::max<std::size_t>(chunk, 1));
        jobs.push_back(std::async(std::launch::async, [&sc, &p, &pts, lo, hi] {
            std::vector<Row> out;
            for (std::size_t i = lo; i < hi; ++i) out.push_back(evaluate_row(sc, p, pts[i]));
            return out;
        }));
    }
    std::vector<Row> rows;
    for (auto& j : jobs)
        for (auto& r : j.get()) rows.push_back(std::move(r));
    return rows;
}

std::vector<Rational> collect_breakpoints(const Scenario& sc, const Pipeline& p) {
    std::set<Rational> all;
    auto add = [&](const NewtonPolygon& np) {
        for (const auto& b : np.breakpoints()) all.insert(b);
    };
    add(NewtonPolygon::joint(sc.map.coords()));
    for (const auto& c : p.composed) add(NewtonPolygon(c));
    for (const auto& c : p.truncated_parts) add(NewtonPolygon(c));
    for (const auto& c : p.lifted_truncated_parts) add(NewtonPolygon(c));
    if (p.wronskian) add(NewtonPolygon(p.wronskian->W));
    if (p.hyperplane_form)
        for (const auto& c : p.composed) add(NewtonPolygon(truncation_polynomial(c, TruncationLevel(p.hyperplane_a))));
    return {all.begin(), all.end()};
}

using Excess = std::optional<Rational> (*)(const Row&);

std::optional<Rational> neg(const std::optional<Rational>& x) {
    if (!x) return std::nullopt;
    return Rational(-*x);
}

struct ExcessSpec {
    const char* name;
    Excess fn;
};

const ExcessSpec kExcess[] = {
    {"smt", [](const Row& r) { return neg(r.smt_defect); }},
    {"truncated_smt_A", [](const Row& r) { return neg(r.defectA); }},
    {"truncated_smt_B", [](const Row& r) { return neg(r.defectB); }},
    {"truncated_smt_B_sigma", [](const Row& r) { return neg(r.defectB_sigma); }},
    {"claim", [](const Row& r) { return r.claim_defect; }},
    {"hyperplane_form", [](const Row& r) { return neg(r.hyp_defect); }},
};

Verdict certify(const char* name, Excess fn, const std::vector<Row>& crit, const Rational& rho_star) {
    // crit: rows at 0, every breakpoint >= 0, then rho*+1, rho*+2, rho*+3.
    Verdict v;
    v.name = name;
    v.last_breakpoint = rho_star;
    v.window_from = rho_star;
    v.window_to = rho_star + 3;
    const std::size_t L = crit.size();
    Rational e0 = *fn(crit[L - 4]), e1 = *fn(crit[L - 3]), e2 = *fn(crit[L - 2]), e3 = *fn(crit[L - 1]);
    Rational s1 = e1 - e0, s2 = e2 - e1, s3 = e3 - e2;
    if (s1 != s2 || s2 != s3)
        throw ConsistencyError(std::string(name) + ": not affine past the last breakpoint " + to_string(rho_star) +
                               " (a breakpoint was missed)");
    v.tail_slope = s3;
    v.tail_value = e3;
    v.bounded = s3 <= 0;
    v.constant_tail = s3 == 0;
    if (v.bounded) {
        Rational mx = *fn(crit.front());
        for (const auto& r : crit) mx = std::max(mx, *fn(r));
        v.constant = mx;
    }
    return v;
}

}  // namespace

Rational check_fmt(const ProjectiveMap& f, const Hypersurface& q, const std::vector<Rational>& grid) {
    if (grid.empty()) throw InputError("check_fmt needs a nonempty grid");
    std::optional<Rational> c;
    for (const auto& rho : grid) {
        Rational v = Rational(q.degree()) * map_characteristic_T(f, rho) - map_proximity(f, q, rho) -
                     map_counting(f, q, rho);
        if (!c)
            c = v;
        else if (*c != v)
            throw ConsistencyError("d T - m - N is not constant: " + to_string(*c) + " at rho = " +
                                   to_string(grid.front()) + " but " + to_string(v) + " at rho = " + to_string(rho));
    }
    return *c;
}

TheoremReport run_scenario(const Scenario& sc, const RunOptions& opt) {
    TheoremReport rep;
    rep.scenario = sc.name;
    rep.seed = opt.seed ? *opt.seed : sc.seed;
    rep.pipeline = build_pipeline(sc, opt);
    const Pipeline& p = rep.pipeline;
    const std::vector<Rational>& grid = opt.grid ? *opt.grid : sc.grid;
    if (grid.empty()) throw InputError("empty grid");

    rep.breakpoints = collect_breakpoints(sc, p);
    std::vector<Rational> crit{Rational(0)};
    for (const auto& b : rep.breakpoints)
        if (b > 0) crit.push_back(b);
    const Rational rho_star = crit.back();
    for (int k = 1; k <= 3; ++k) crit.push_back(rho_star + k);

    std::vector<Rational> pts = grid;
    pts.insert(pts.end(), crit.begin(), crit.end());
    std::vector<Row> all = evaluate_rows(sc, p, pts);
    std::vector<Row> crit_rows(all.begin() + static_cast<long>(grid.size()), all.end());
    all.resize(grid.size());
    rep.rows = std::move(all);

    rep.fmt_constants = crit_rows.front().fmt;
    for (const auto* rows : {&rep.rows, &crit_rows})
        for (const auto& r : *rows)
            for (std::size_t i = 0; i < p.q; ++i)
                if (r.fmt[i] != rep.fmt_constants[i])
                    throw ConsistencyError("first main theorem: d T - m - N for hypersurface " + std::to_string(i) +
                                           " is " + to_string(r.fmt[i]) + " at rho = " + to_string(r.rho) +
                                           " but " + to_string(rep.fmt_constants[i]) + " at rho = 0");

    for (const auto& spec : kExcess)
        if (spec.fn(crit_rows.front())) rep.verdicts.push_back(certify(spec.name, spec.fn, crit_rows, rho_star));

    if (p.hyperplane_form) {
        rep.hyperplane_agrees = true;
        for (const auto& r : rep.rows) {
            const char* what = *r.hyp_lhs != *r.lhsB ? "lhs" : *r.hyp_rhs != *r.rhs ? "rhs" : nullptr;
            if (!what) continue;
            rep.hyperplane_agrees = false;
            bool lhs = std::string(what) == "lhs";
            rep.hyperplane_mismatch = std::string(what) + " at rho = " + to_string(r.rho) + ": truncated_smt " +
                                      to_string(lhs ? *r.lhsB : *r.rhs) + " vs hyperplane form " +
                                      to_string(lhs ? *r.hyp_lhs : *r.hyp_rhs);
            break;
        }
    }

    if (opt.spot_checks) {
        auto bad = spot_check(sc, rep, rep.seed, opt.spot_checks);
        if (!bad.empty()) throw ConsistencyError("spot check: " + bad.front());
        rep.spot_checked = opt.spot_checks;
    }

    bool violated = std::any_of(rep.verdicts.begin(), rep.verdicts.end(), [](const Verdict& v) { return !v.bounded; });
    rep.status = violated                          ? RunStatus::violated
                 : !p.position.all_certified()     ? RunStatus::undetermined
                                                   : RunStatus::certified;
    return rep;
}

std::vector<std::string> spot_check(const Scenario& sc, const TheoremReport& r, std::uint64_t seed, unsigned count) {
    std::vector<std::string> bad;
    if (r.rows.empty()) return bad;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const Pipeline& p = r.pipeline;
    const std::size_t kinds = p.truncated ? 4 : 3;
    for (unsigned c = 0; c < count; ++c) {
        const Row& row = r.rows[rng() % r.rows.size()];
        const std::size_t i = rng() % p.q;
        const std::size_t kind = rng() % kinds;
        const Hypersurface& h = sc.hypersurfaces[i];
        Rational expect, got;
        std::string cell;
        if (kind == 0) {
            // T through the coordinates' individual Gauss norms
            LogValue mx;
            for (const auto& f : sc.map.coords()) mx = max(mx, gauss_norm(f, row.rho));
            expect = mx.value();
            got = row.T;
            cell = "T";
        } else if (kind == 1) {
            expect = map_counting(sc.map, h, row.rho);
            got = row.N[i];
            cell = "N_" + std::to_string(i + 1);
        } else if (kind == 2) {
            expect = map_proximity(sc.map, h, row.rho);
            got = row.m[i];
            cell = "m_" + std::to_string(i + 1);
        } else {
            expect = map_counting(sc.map, h, row.rho, TruncationLevel(p.kappa0));
            got = row.Ntrunc[i];
            cell = "N_trunc_" + std::to_string(i + 1);
        }
        if (expect != got)
            bad.push_back(cell + " at rho = " + to_string(row.rho) + ": report " + to_string(got) + ", recomputed " +
                          to_string(expect));
    }
    return bad;
}

}  // namespace nevan
