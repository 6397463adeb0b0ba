#include "sphnorm/catalog.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace sphnorm {

IntVec parse_linear(const std::string& text, const std::vector<std::string>& symbols)
{
    IntVec v(symbols.size(), 0);
    std::size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse '" + text + "': " + why);
    };
    skip();
    if (text.find_first_not_of(" \t0") == std::string::npos && text.find('0') != std::string::npos) return v;
    bool first = true;
    while (true) {
        skip();
        if (i >= n) {
            if (first) fail("empty expression");
            break;
        }
        i64 sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected + or -");
        }
        i64 coef = 1;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coef = std::stoll(text.substr(i, j - i));
            i = j;
            skip();
            if (i < n && text[i] == '*') {
                ++i;
                skip();
            }
        }
        std::size_t j = i;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        if (j == i) fail("missing symbol");
        std::string sym = text.substr(i, j - i);
        i = j;
        auto it = std::find(symbols.begin(), symbols.end(), sym);
        if (it == symbols.end()) fail("unknown symbol '" + sym + "'");
        v[it - symbols.begin()] = checked_add(v[it - symbols.begin()], sign * coef);
        first = false;
    }
    return v;
}

namespace {

struct Ctx {
    std::string record;
    int line = 0;
    [[noreturn]] void fail(const std::string& msg) const
    {
        std::string where = record.empty() ? "catalog" : "record " + record;
        throw CatalogError(where + " (line " + std::to_string(line) + "): " + msg);
    }
};

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : 0; }

std::string scalar(const Ctx& c, const YAML::Node& n, const std::string& what)
{
    if (!n || !n.IsScalar()) c.fail("field '" + what + "' must be a scalar");
    return n.as<std::string>();
}

template <class F>
auto guarded(const Ctx& c, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
}

std::vector<std::string> string_list(const Ctx& c, const YAML::Node& n, const std::string& what)
{
    std::vector<std::string> out;
    if (!n) return out;
    if (!n.IsSequence()) c.fail("field '" + what + "' must be a list");
    for (const auto& x : n) out.push_back(scalar(c, x, what));
    return out;
}

SphericalSystem load_system(const YAML::Node& node)
{
    Ctx c{"", line_of(node)};
    std::string name = scalar(c, node["name"], "name");
    c.record = "system " + name;
    std::vector<SimpleType> ambient;
    for (const auto& t : string_list(c, node["ambient"], "ambient"))
        ambient.push_back(guarded(c, [&] { return parse_simple_type(t); }));
    if (ambient.empty()) c.fail("ambient type list is empty");
    SphericalSystem s = make_system_frame(ambient);
    s.name = name;
    for (const auto& r : string_list(c, node["sp"], "sp")) {
        int i = s.simple_root_index(r);
        if (i < 0) c.fail("unknown simple root '" + r + "' in sp");
        s.sp[i] = true;
    }
    const auto& cols = node["colors"];
    if (!cols || !cols.IsSequence()) c.fail("field 'colors' must be a list");
    for (const auto& col : cols) {
        c.line = line_of(col);
        s.colors.push_back(scalar(c, col["name"], "name"));
        std::vector<int> inc;
        for (const auto& r : string_list(c, col["roots"], "roots")) {
            int i = s.simple_root_index(r);
            if (i < 0) c.fail("unknown simple root '" + r + "'");
            inc.push_back(i);
        }
        s.incidence.push_back(inc);
    }
    const auto& sig = node["sigma"];
    if (sig && !sig.IsSequence()) c.fail("field 'sigma' must be a list");
    s.pairing.assign(s.colors.size(), {});
    if (sig) {
        for (const auto& x : sig) {
            c.line = line_of(x);
            s.sigma_names.push_back(scalar(c, x["name"], "name"));
            s.sigma_roots.push_back(
                guarded(c, [&] { return parse_linear(scalar(c, x["root"], "root"), s.simple_roots); }));
            IntVec col = guarded(c, [&] { return parse_linear(scalar(c, x["colors"], "colors"), s.colors); });
            for (std::size_t d = 0; d < col.size(); ++d) s.pairing[d].push_back(col[d]);
        }
    }
    c.line = line_of(node);
    auto rep = validate(s);
    for (const auto& d : rep.checks)
        if (!d.ok) c.fail("validation '" + d.check + "' failed: " + d.witness);
    return s;
}

std::vector<SigmaVector> sigma_list(const Ctx& c, const YAML::Node& n, const SphericalSystem& s)
{
    std::vector<SigmaVector> out;
    for (const auto& x : string_list(c, n, "sigma list"))
        out.push_back(guarded(c, [&] { return parse_linear(x, s.sigma_names); }));
    return out;
}

int color_of(const Ctx& c, const SphericalSystem& s, const std::string& label)
{
    int d = s.color_index(label);
    if (d < 0) c.fail("unknown color '" + label + "'");
    return d;
}

Expected load_expected(const Ctx& c, const YAML::Node& n, const SphericalSystem* s)
{
    Expected e;
    if (!n) return e;
    if (!n.IsMap()) c.fail("field 'expected' must be a map");
    if (n["normal"]) e.normal = guarded(c, [&] { return n["normal"].as<bool>(); });
    if (n["free"]) e.free = guarded(c, [&] { return n["free"].as<bool>(); });
    if (n["same_as"]) e.same_as = scalar(c, n["same_as"], "same_as");
    bool needs_system = n["covering"] || n["low_triples"] || n["generators"] || n["gamma_sigma"] || n["witness"];
    if (needs_system && !s) c.fail("expected spherical data given without a spherical system");
    if (n["covering"]) e.covering = sigma_list(c, n["covering"], *s);
    if (n["low_triples"]) {
        std::vector<ExpectedLowTriple> v;
        for (const auto& t : n["low_triples"]) {
            ExpectedLowTriple lt;
            lt.d = color_of(c, *s, scalar(c, t["d"], "d"));
            lt.e = color_of(c, *s, scalar(c, t["e"], "e"));
            if (lt.d > lt.e) std::swap(lt.d, lt.e);
            lt.f = guarded(c, [&] { return parse_linear(scalar(c, t["f"], "f"), s->colors); });
            lt.gamma = guarded(c, [&] { return parse_linear(scalar(c, t["gamma"], "gamma"), s->sigma_names); });
            v.push_back(lt);
        }
        e.low_triples = v;
    }
    if (n["generators"]) {
        std::vector<ExpectedGenerator> v;
        for (const auto& g : n["generators"]) {
            ExpectedGenerator eg;
            for (const auto& k : g["n"]) eg.n.push_back(guarded(c, [&] { return k.as<i64>(); }));
            eg.color = guarded(c, [&] { return parse_linear(scalar(c, g["D"], "D"), s->colors); });
            eg.corr = guarded(c, [&] { return parse_linear(scalar(c, g["corr"], "corr"), s->sigma_names); });
            v.push_back(eg);
        }
        e.generators = v;
    }
    if (n["gamma_sigma"]) {
        ExpectedGammaSigma gs;
        for (const auto& a : string_list(c, n["gamma_sigma"]["allowed"], "allowed")) gs.allowed.push_back(color_of(c, *s, a));
        gs.generators = sigma_list(c, n["gamma_sigma"]["generators"], *s);
        e.gamma_sigma = gs;
    }
    if (n["witness"]) {
        ExpectedWitness w;
        w.gamma = guarded(c, [&] { return parse_linear(scalar(c, n["witness"]["gamma"], "gamma"), s->sigma_names); });
        w.remainder =
            guarded(c, [&] { return parse_linear(scalar(c, n["witness"]["remainder"], "remainder"), s->colors); });
        e.witness = w;
    }
    return e;
}

Catalog build(const YAML::Node& root)
{
    Catalog cat;
    if (!root || root.IsNull()) return cat;
    Ctx c{"", line_of(root)};
    if (!root.IsMap()) c.fail("top level must be a map");
    if (!root["version"]) c.fail("missing mandatory field 'version'");
    cat.version = guarded(c, [&] { return root["version"].as<int>(); });
    if (cat.version != 1) c.fail("unsupported catalog version " + std::to_string(cat.version));

    for (const auto& p : root["pairs"]) {
        Ctx pc{"", line_of(p)};
        PairInfo info;
        info.id = guarded(pc, [&] { return p["id"].as<int>(); });
        pc.record = "pair " + std::to_string(info.id);
        info.name = scalar(pc, p["name"], "name");
        info.g = guarded(pc, [&] { return parse_simple_type(scalar(pc, p["g"], "g")); });
        info.k = scalar(pc, p["k"], "k");
        if (p["hermitian_root"]) {
            std::string r = scalar(pc, p["hermitian_root"], "hermitian_root");
            auto labels = simple_root_labels({info.g});
            auto it = std::find(labels.begin(), labels.end(), r);
            if (it == labels.end()) pc.fail("unknown simple root '" + r + "'");
            info.hermitian_root = static_cast<int>(it - labels.begin());
        }
        cat.pairs.push_back(info);
    }
    for (const auto& s : root["systems"]) {
        SphericalSystem sys = load_system(s);
        if (cat.systems.count(sys.name)) Ctx{"system " + sys.name, line_of(s)}.fail("duplicate system name");
        cat.systems.emplace(sys.name, std::move(sys));
    }
    std::set<std::string> seen;
    for (const auto& r : root["cases"]) {
        Ctx rc{"", line_of(r)};
        OrbitRecord rec;
        rec.line = rc.line;
        rec.id = scalar(rc, r["id"], "id");
        rc.record = rec.id;
        if (!seen.insert(rec.id).second) rc.fail("duplicate case id");
        if (r["pair"]) {
            rec.pair = guarded(rc, [&] { return r["pair"].as<int>(); });
            if (std::none_of(cat.pairs.begin(), cat.pairs.end(), [&](const PairInfo& p) { return p.id == *rec.pair; }))
                rc.fail("unknown pair " + std::to_string(*rec.pair));
        }
        if (r["kd_k"]) rec.kd_k = scalar(rc, r["kd_k"], "kd_k");
        if (const auto& t = r["triple"]) {
            rec.triple = TripleSource{scalar(rc, t["e"], "e"), scalar(rc, t["h"], "h"), scalar(rc, t["f"], "f")};
        }
        if (const auto& e = r["erratum"]) {
            rec.erratum = Erratum{scalar(rc, e["field"], "field"), scalar(rc, e["printed"], "printed"),
                                  scalar(rc, e["note"], "note")};
        }
        if (r["alias_of"]) rec.alias_of = scalar(rc, r["alias_of"], "alias_of");
        const SphericalSystem* sys = nullptr;
        if (r["system"]) {
            std::string s = scalar(rc, r["system"], "system");
            if (s == "gap") {
                rec.kind = SystemKind::gap;
                if (r["gap_reason"]) rec.gap_reason = scalar(rc, r["gap_reason"], "gap_reason");
            } else if (s == "rank0") {
                rec.kind = SystemKind::rank0;
            } else {
                auto it = cat.systems.find(s);
                if (it == cat.systems.end()) rc.fail("unknown system '" + s + "'");
                rec.kind = SystemKind::present;
                rec.system_name = s;
                sys = &it->second;
            }
        }
        if (r["divisors"]) {
            if (!sys) rc.fail("divisors given without a spherical system");
            for (const auto& d : string_list(rc, r["divisors"], "divisors")) {
                ColorVector v = guarded(rc, [&] { return parse_linear(d, sys->colors); });
                if (std::any_of(v.begin(), v.end(), [](i64 x) { return x < 0; })) rc.fail("divisor not in N Delta: " + d);
                rec.divisors.push_back(v);
            }
        }
        if (r["lambda_star"]) {
            if (!sys) rc.fail("lambda_star given without a spherical system");
            for (const auto& w : string_list(rc, r["lambda_star"], "lambda_star"))
                rec.lambda_star.push_back(guarded(rc, [&] { return parse_linear(w, sys->simple_roots); }));
            if (rec.lambda_star.size() != rec.divisors.size()) rc.fail("lambda_star and divisors differ in length");
        }
        if (r["central_charges"]) {
            for (const auto& x : r["central_charges"]) rec.charges.push_back(guarded(rc, [&] { return x.as<i64>(); }));
            if (rec.charges.size() != rec.divisors.size()) rc.fail("central_charges and divisors differ in length");
        }
        rec.expected = load_expected(rc, r["expected"], sys);
        if (rec.pair && !rec.expected.normal) rc.fail("orbit record lacks expected.normal");
        cat.cases.push_back(std::move(rec));
    }
    for (const auto& rec : cat.cases) {
        Ctx rc{rec.id, rec.line};
        if (rec.alias_of) {
            const OrbitRecord* a = cat.find(*rec.alias_of);
            if (!a) rc.fail("alias target '" + *rec.alias_of + "' does not exist");
            if (a->expected.normal != rec.expected.normal) rc.fail("expected normality differs from alias target");
        }
        if (rec.expected.same_as && !cat.find(*rec.expected.same_as))
            rc.fail("same_as target '" + *rec.expected.same_as + "' does not exist");
    }
    return cat;
}

}  // namespace

const OrbitRecord* Catalog::find(const std::string& id) const
{
    for (const auto& r : cases)
        if (r.id == id) return &r;
    return nullptr;
}

const PairInfo* Catalog::pair_of(const OrbitRecord& r) const
{
    if (!r.pair) return nullptr;
    for (const auto& p : pairs)
        if (p.id == *r.pair) return &p;
    return nullptr;
}

const SphericalSystem* Catalog::system_of(const OrbitRecord& r) const
{
    if (r.kind != SystemKind::present) return nullptr;
    auto it = systems.find(r.system_name);
    return it == systems.end() ? nullptr : &it->second;
}

std::size_t Catalog::gap_count() const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const OrbitRecord& r) { return r.kind == SystemKind::gap; }));
}

std::vector<std::string> Catalog::ids() const
{
    std::vector<std::string> out;
    for (const auto& r : cases) out.push_back(r.id);
    return out;
}

Catalog load_catalog_text(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw CatalogError("catalog (line " + std::to_string(e.mark.line + 1) + "): " + e.msg);
    }
    return build(root);
}

Catalog load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog_text(ss.str());
}

std::string default_catalog_path() { return std::string(SPHNORM_DATA_DIR) + "/catalog.yaml"; }

}  // namespace sphnorm
