#include "nevan/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nevan {

using ojson = nlohmann::ordered_json;

namespace {

std::string cell(const std::optional<Rational>& x) { return x ? to_string(*x) : std::string(); }

std::string joined(const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ";" : "") + to_string(xs[i]);
    return out;
}

ojson rationals(const std::vector<Rational>& xs) {
    ojson a = ojson::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
}

ojson opt(const std::optional<Rational>& x) { return x ? ojson(to_string(*x)) : ojson(nullptr); }

}  // namespace

std::string to_csv(const TheoremReport& r) {
    std::ostringstream out;
    const std::size_t q = r.pipeline.q;
    out << "rho,T";
    for (std::size_t i = 1; i <= q; ++i) out << ",N_" << i << ",N_trunc_" << i << ",m_" << i;
    out << ",lhsA,lhsB,rhs,defectA,defectB,claim_defect,fmt_consts"
        << ",rhs_sigma,defectB_sigma,smt_lhs,smt_rhs,smt_defect,hyp_lhs,hyp_rhs,hyp_defect\n";
    for (const auto& row : r.rows) {
        out << to_string(row.rho) << ',' << to_string(row.T);
        for (std::size_t i = 0; i < q; ++i)
            out << ',' << to_string(row.N[i]) << ',' << (row.Ntrunc.empty() ? "" : to_string(row.Ntrunc[i])) << ','
                << to_string(row.m[i]);
        for (const auto* x : {&row.lhsA, &row.lhsB, &row.rhs, &row.defectA, &row.defectB, &row.claim_defect})
            out << ',' << cell(*x);
        out << ',' << joined(row.fmt);
        for (const auto* x : {&row.rhs_sigma, &row.defectB_sigma, &row.smt_lhs, &row.smt_rhs, &row.smt_defect,
                              &row.hyp_lhs, &row.hyp_rhs, &row.hyp_defect})
            out << ',' << cell(*x);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const TheoremReport& r) {
    const Pipeline& p = r.pipeline;
    ojson j;
    j["scenario"] = r.scenario;
    j["seed"] = r.seed;
    j["status"] = to_string(r.status);
    j["q"] = p.q;
    j["N"] = p.N;
    j["n"] = p.n;
    j["M"] = p.M;
    j["d"] = p.d;

    ojson pos = ojson::array();
    for (const auto& c : p.position.subsets) {
        ojson e;
        e["subset"] = c.subset;
        e["status"] = to_string(c.status);
        if (c.status == PositionStatus::certified) e["degree"] = c.degree;
        pos.push_back(e);
    }
    j["position"] = pos;

    if (p.truncated) {
        ojson t;
        t["H"] = p.H;
        t["rank_f"] = p.k;
        t["index_s"] = p.s ? ojson(*p.s) : ojson(nullptr);
        t["kappa0"] = p.kappa0;
        t["omega"] = rationals(p.weights->omega);
        t["omega_tilde"] = to_string(p.weights->omega_tilde);
        ojson gammas = ojson::array();
        for (const auto& g : p.wronskian->gammas) gammas.push_back(g.exponents());
        t["wronskian"] = {{"gammas", gammas},
                          {"W", p.wronskian->W.str()},
                          {"gamma_sum", p.wronskian->gamma_sum},
                          {"nominal_gamma_sum", p.H - 1}};
        if (p.hyperplane_form) t["hyperplane_a"] = p.hyperplane_a;
        j["truncated_smt"] = t;
    }
    if (r.hyperplane_agrees) {
        j["hyperplane_agrees"] = *r.hyperplane_agrees;
        if (r.hyperplane_mismatch) j["hyperplane_mismatch"] = *r.hyperplane_mismatch;
    }

    ojson verdicts = ojson::array();
    for (const auto& v : r.verdicts) {
        ojson e;
        e["name"] = v.name;
        e["bounded"] = v.bounded;
        e["constant_tail"] = v.constant_tail;
        e["tail_slope"] = to_string(v.tail_slope);
        e["tail_value"] = to_string(v.tail_value);
        e["window"] = {to_string(v.window_from), to_string(v.window_to)};
        e["constant"] = opt(v.constant);
        verdicts.push_back(e);
    }
    j["verdicts"] = verdicts;
    j["fmt_constants"] = rationals(r.fmt_constants);
    j["breakpoints"] = rationals(r.breakpoints);
    j["spot_checked"] = r.spot_checked;
    j["notes"] = p.notes;

    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson e;
        e["rho"] = to_string(row.rho);
        e["T"] = to_string(row.T);
        e["N"] = rationals(row.N);
        e["N_trunc"] = rationals(row.Ntrunc);
        e["m"] = rationals(row.m);
        e["lhsA"] = opt(row.lhsA);
        e["lhsB"] = opt(row.lhsB);
        e["rhs"] = opt(row.rhs);
        e["rhs_sigma"] = opt(row.rhs_sigma);
        e["defectA"] = opt(row.defectA);
        e["defectB"] = opt(row.defectB);
        e["defectB_sigma"] = opt(row.defectB_sigma);
        e["claim_defect"] = opt(row.claim_defect);
        e["smt_lhs"] = opt(row.smt_lhs);
        e["smt_rhs"] = opt(row.smt_rhs);
        e["smt_defect"] = opt(row.smt_defect);
        e["hyp_lhs"] = opt(row.hyp_lhs);
        e["hyp_rhs"] = opt(row.hyp_rhs);
        e["hyp_defect"] = opt(row.hyp_defect);
        e["fmt"] = rationals(row.fmt);
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace nevan
