// nevan: certify second main theorems for non-Archimedean maps on scenario
// files, and expose the building blocks (weights, Wronskians, Hilbert
// functions) for inspection.
//
// Exit status: 0 = everything certified, 2 = some position certificate
// undetermined (non-strict mode), 1 = violation or error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nevan/harness.hpp"
#include "nevan/parser.hpp"
#include "nevan/report.hpp"
#include "nevan/selftest.hpp"

using namespace nevan;

namespace {

struct Common {
    std::string scenario, out, format = "csv", grid;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> degree_bound;
    bool strict = false;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + c.out + "'");
    f << text;
}

int cmd_check(const Common& c) {
    Scenario sc = load_scenario(c.scenario);
    RunOptions opt;
    opt.strict = c.strict;
    opt.seed = c.seed;
    opt.degree_bound = c.degree_bound;
    if (!c.grid.empty()) opt.grid = parse_grid(c.grid);
    TheoremReport r = run_scenario(sc, opt);
    emit(c, c.format == "json" ? to_json(r) : to_csv(r));
    for (const auto& v : r.verdicts)
        std::cerr << v.name << ": " << (v.bounded ? "bounded" : "UNBOUNDED") << ", tail slope "
                  << to_string(v.tail_slope) << " past rho = " << to_string(v.last_breakpoint)
                  << (v.constant ? ", O(1) = " + to_string(*v.constant) : std::string()) << '\n';
    if (r.hyperplane_agrees)
        std::cerr << "hyperplane form: " << (*r.hyperplane_agrees ? "agrees cell for cell" : "differs, " + *r.hyperplane_mismatch)
                  << '\n';
    for (const auto& n : r.pipeline.notes) std::cerr << "note: " << n << '\n';
    std::cerr << "status: " << to_string(r.status) << '\n';
    return r.status == RunStatus::certified ? 0 : r.status == RunStatus::undetermined ? 2 : 1;
}

int cmd_selftest(const Common& c) {
    auto results = run_selftest(c.seed.value_or(1));
    emit(c, selftest_csv(results));
    std::size_t failures = 0;
    for (const auto& r : results) failures += r.failures;
    return failures ? 1 : 0;
}

int cmd_nochka(const Common& c, std::size_t q, std::size_t N, std::size_t n) {
    if (!c.scenario.empty()) {
        Scenario sc = load_scenario(c.scenario);
        q = sc.q();
        N = sc.N;
        n = sc.n();
    }
    NochkaWeights w = compute_weights(q, N, n);
    if (c.format == "json") {
        std::string out = "{\"q\": " + std::to_string(q) + ", \"N\": " + std::to_string(N) +
                          ", \"n\": " + std::to_string(n) + ", \"omega_tilde\": \"" + to_string(w.omega_tilde) +
                          "\", \"omega\": [";
        for (std::size_t i = 0; i < w.omega.size(); ++i) out += (i ? ", \"" : "\"") + to_string(w.omega[i]) + "\"";
        emit(c, out + "]}\n");
    } else {
        std::string out = "i,omega\n";
        for (std::size_t i = 0; i < w.omega.size(); ++i) out += std::to_string(i + 1) + "," + to_string(w.omega[i]) + "\n";
        out += "tilde," + to_string(w.omega_tilde) + "\n";
        emit(c, out);
    }
    return 0;
}

int cmd_wronskian(const Common& c) {
    Scenario sc = load_scenario(c.scenario);
    unsigned d = sc.common_degree();
    std::size_t H = hilbert_function(sc.variety, d);
    std::size_t k = rank_f(sc.map);
    auto s = index_s(sc.map, sc.variety, d);
    std::uint64_t k0 = kappa0(H, k, s, sc.field.characteristic());
    WronskianCertificate w = find_wronskian(sc.map, sc.variety, d, k0);
    std::string out = "d," + std::to_string(d) + "\nH," + std::to_string(H) + "\nrank_f," + std::to_string(k) +
                      "\nindex_s," + (s ? std::to_string(*s) : std::string()) + "\nkappa0," + std::to_string(k0) +
                      "\ngamma_sum," + std::to_string(w.gamma_sum) + "\ngammas,";
    for (std::size_t i = 0; i < w.gammas.size(); ++i) out += (i ? ";" : "") + w.gammas[i].str();
    out += "\nW," + w.W.str(domain_names(sc.map.domain_vars())) + "\n";
    emit(c, out);
    return 0;
}

int cmd_hilbert(const Common& c) {
    Scenario sc = load_scenario(c.scenario);
    std::vector<Rational> ds = parse_grid(c.grid.empty() ? "1:6:1" : c.grid);
    std::string out = "d,H\n";
    for (const auto& d : ds) {
        if (d.get_den() != 1 || d < 1) throw InputError("hilbert degrees must be positive integers");
        unsigned di = static_cast<unsigned>(d.get_num().get_ui());
        out += std::to_string(di) + "," + std::to_string(hilbert_function(sc.variety, di)) + "\n";
    }
    emit(c, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of non-Archimedean second main theorems"};
    app.require_subcommand(1);
    Common c;
    std::size_t q = 0, N = 0, n = 0;

    auto add_common = [&](CLI::App* sub, bool needs_scenario) {
        auto* opt = sub->add_option("--scenario", c.scenario, "scenario JSON file");
        if (needs_scenario) opt->required()->check(CLI::ExistingFile);
        sub->add_option("--out", c.out, "write the report here instead of stdout");
        sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", c.seed, "seed (unsigned 64-bit)");
    };

    auto* check = app.add_subcommand("check", "run a scenario and emit its report");
    add_common(check, true);
    check->add_option("--grid", c.grid, "override the radius grid, \"a:b:step\"");
    check->add_option("--degree-bound", c.degree_bound, "position certificate degree bound");
    check->add_flag("--strict", c.strict, "treat undetermined position certificates as fatal");

    auto* selftest = app.add_subcommand("selftest", "run the seeded property battery");
    add_common(selftest, false);

    auto* nochka = app.add_subcommand("nochka", "weights for q hypersurfaces in N-subgeneral position in dimension n");
    add_common(nochka, false);
    nochka->add_option("-q", q, "number of hypersurfaces");
    nochka->add_option("-N", N, "subgeneral position index");
    nochka->add_option("-n", n, "dimension of V");

    auto* wronskian = app.add_subcommand("wronskian", "Wronskian certificate of a scenario's map");
    add_common(wronskian, true);

    auto* hilbert = app.add_subcommand("hilbert", "table of H_V(d) for a scenario's variety");
    add_common(hilbert, true);
    hilbert->add_option("--grid", c.grid, "degrees \"a:b:step\" (default 1:6:1)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (check->parsed()) return cmd_check(c);
        if (selftest->parsed()) return cmd_selftest(c);
        if (nochka->parsed()) {
            if (c.scenario.empty() && (!q || !N || !n)) throw InputError("nochka needs --scenario or -q, -N and -n");
            return cmd_nochka(c, q, N, n);
        }
        if (wronskian->parsed()) return cmd_wronskian(c);
        if (hilbert->parsed()) return cmd_hilbert(c);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
