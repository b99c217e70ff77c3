#include "nevan/scenario.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "nevan/parser.hpp"

namespace nevan {

using json = nlohmann::json;

std::string to_string(Check c) { return c == Check::smt ? "smt" : "truncated_smt"; }

bool Scenario::runs(Check c) const { return std::find(checks.begin(), checks.end(), c) != checks.end(); }

unsigned Scenario::common_degree() const {
    unsigned l = 1;
    for (const auto& h : hypersurfaces) l = std::lcm(l, h.degree());
    if (!degree) return l;
    if (*degree == 0 || *degree % l != 0)
        throw InputError("degree " + std::to_string(*degree) + " is not a multiple of every hypersurface degree (lcm " +
                         std::to_string(l) + ")");
    return *degree;
}

std::vector<Rational> make_grid(const Rational& from, const Rational& to, const Rational& step) {
    if (step <= 0) throw InputError("grid step must be positive");
    if (to < from) throw InputError("grid end " + to_string(to) + " precedes its start " + to_string(from));
    std::vector<Rational> out;
    for (Rational r = from; r <= to; r += step) {
        if (out.size() >= 100000) throw InputError("grid has more than 100000 points");
        out.push_back(r);
    }
    return out;
}

std::vector<Rational> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.size() != 3) throw InputError("grid must look like a:b:step, got '" + spec + "'");
    return make_grid(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& msg) const {
        throw InputError(origin_ + ": " + where + ": " + msg);
    }

    const json& require(const json& obj, const std::string& key) const {
        auto it = obj.find(key);
        if (it == obj.end()) fail(key, "missing");
        return *it;
    }

    std::uint64_t uint(const json& v, const std::string& where) const {
        if (!v.is_number_unsigned()) fail(where, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    Rational rational(const json& v, const std::string& where) const {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (!v.is_string()) fail(where, "expected a rational string \"a/b\"");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }

    std::string string(const json& v, const std::string& where) const {
        if (!v.is_string()) fail(where, "expected a string");
        return v.get<std::string>();
    }

    Polynomial poly(const json& v, const std::string& where, const Field& f, const std::vector<std::string>& names) const {
        std::string text = string(v, where);
        try {
            return parse_polynomial(text, f, names);
        } catch (const ParseError& e) {
            throw ParseError(origin_ + ": " + where + ": \"" + text + "\": " + e.reason(), e.column());
        }
    }

    const json& array(const json& v, const std::string& where) const {
        if (!v.is_array()) fail(where, "expected an array");
        return v;
    }

private:
    std::string origin_;
};

std::string indexed(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string detail = e.what();
        if (auto at = detail.find(": ", detail.find("column")); at != std::string::npos) detail = detail.substr(at + 2);
        throw ParseError(origin + ": invalid JSON at line " + std::to_string(line) + ": " + detail, col);
    }
    Reader rd(origin);
    if (!doc.is_object()) rd.fail("document", "expected a JSON object");

    static const std::vector<std::string> known = {"name", "field", "ambient", "domain_vars", "variety",
                                                   "map", "hypersurfaces", "N", "degree", "grid",
                                                   "degree_bound", "seed", "checks", "description"};
    for (const auto& [key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) rd.fail(key, "unknown field");

    const json& fj = rd.require(doc, "field");
    if (!fj.is_object()) rd.fail("field", "expected {\"kind\": ..., \"p\": ...}");
    std::string kind = rd.string(rd.require(fj, "kind"), "field.kind");
    auto p = static_cast<std::uint32_t>(rd.uint(rd.require(fj, "p"), "field.p"));
    if (kind != "padic" && kind != "tadic") rd.fail("field.kind", "expected \"padic\" or \"tadic\"");
    Field field = [&] {
        try {
            return Field(kind == "padic" ? FieldKind::padic : FieldKind::tadic, p);
        } catch (const InputError& e) {
            rd.fail("field", e.what());
        }
    }();

    const std::size_t M = rd.uint(rd.require(doc, "ambient"), "ambient");
    if (M == 0) rd.fail("ambient", "must be at least 1");
    const std::size_t m = rd.uint(rd.require(doc, "domain_vars"), "domain_vars");
    if (m == 0) rd.fail("domain_vars", "must be at least 1");
    const auto xs = ambient_names(M + 1);
    auto zs = domain_names(m);

    auto wrap = [&](const std::string& where, auto&& fn) {
        try {
            return fn();
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            rd.fail(where, e.what());
        }
    };

    Variety variety = Variety::projective_space(field, M);
    if (auto it = doc.find("variety"); it != doc.end()) {
        const json& vj = *it;
        if (!vj.is_object()) rd.fail("variety", "expected {\"generators\": [...], \"dimension\": n}");
        std::vector<Polynomial> gens;
        const json& ga = rd.array(rd.require(vj, "generators"), "variety.generators");
        for (std::size_t i = 0; i < ga.size(); ++i)
            gens.push_back(rd.poly(ga[i], indexed("variety.generators", i), field, xs));
        std::size_t dim = rd.uint(rd.require(vj, "dimension"), "variety.dimension");
        variety = wrap("variety", [&] { return Variety(field, M, gens, dim); });
    }

    const json& mj = rd.array(rd.require(doc, "map"), "map");
    if (mj.size() != M + 1) rd.fail("map", "expected " + std::to_string(M + 1) + " coordinates");
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < mj.size(); ++i) {
        std::string where = indexed("map", i);
        std::string text = rd.string(mj[i], where);
        try {
            coords.push_back(m == 1 ? parse_domain(text, field, 1) : parse_polynomial(text, field, zs));
        } catch (const ParseError& e) {
            throw ParseError(origin + ": " + where + ": \"" + text + "\": " + e.reason(), e.column());
        }
    }
    ProjectiveMap map = wrap("map", [&] { return ProjectiveMap::reduce(coords); });
    wrap("map", [&] {
        map.require_in(variety);
        return 0;
    });

    const json& hj = rd.array(rd.require(doc, "hypersurfaces"), "hypersurfaces");
    std::vector<Hypersurface> hs;
    for (std::size_t i = 0; i < hj.size(); ++i) {
        std::string where = indexed("hypersurfaces", i);
        Polynomial q = rd.poly(hj[i], where, field, xs);
        hs.push_back(wrap(where, [&] { return Hypersurface(q); }));
    }
    if (hs.empty()) rd.fail("hypersurfaces", "at least one hypersurface is required");

    Scenario sc{.name = doc.contains("name") ? rd.string(doc["name"], "name") : origin,
                .field = field,
                .variety = variety,
                .map = map,
                .hypersurfaces = hs,
                .N = rd.uint(rd.require(doc, "N"), "N"),
                .degree = std::nullopt,
                .grid = {},
                .degree_bound = std::nullopt,
                .seed = 0,
                .checks = {Check::smt, Check::truncated_smt}};
    if (doc.contains("degree")) sc.degree = static_cast<unsigned>(rd.uint(doc["degree"], "degree"));
    if (doc.contains("degree_bound"))
        sc.degree_bound = static_cast<unsigned>(rd.uint(doc["degree_bound"], "degree_bound"));
    if (doc.contains("seed")) sc.seed = rd.uint(doc["seed"], "seed");
    if (doc.contains("checks")) {
        sc.checks.clear();
        const json& cj = rd.array(doc["checks"], "checks");
        for (std::size_t i = 0; i < cj.size(); ++i) {
            std::string c = rd.string(cj[i], indexed("checks", i));
            if (c == "smt")
                sc.checks.push_back(Check::smt);
            else if (c == "truncated_smt")
                sc.checks.push_back(Check::truncated_smt);
            else
                rd.fail(indexed("checks", i), "expected \"smt\" or \"truncated_smt\"");
        }
    }
    wrap("degree", [&] { return sc.common_degree(); });

    const json& gj = rd.require(doc, "grid");
    if (gj.is_array()) {
        for (std::size_t i = 0; i < gj.size(); ++i) sc.grid.push_back(rd.rational(gj[i], indexed("grid", i)));
    } else if (gj.is_object()) {
        Rational from = rd.rational(rd.require(gj, "from"), "grid.from");
        Rational to = rd.rational(rd.require(gj, "to"), "grid.to");
        Rational step = rd.rational(rd.require(gj, "step"), "grid.step");
        sc.grid = wrap("grid", [&] { return make_grid(from, to, step); });
    } else {
        rd.fail("grid", "expected a list of rationals or {\"from\", \"to\", \"step\"}");
    }
    if (sc.grid.empty()) rd.fail("grid", "must not be empty");
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

}  // namespace nevan
