#include "sphnorm/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sphnorm {

namespace {

constexpr int default_bound = 8;

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string format_ints(const IntVec& v)
{
    std::vector<std::string> s;
    for (i64 x : v) s.push_back(std::to_string(x));
    return "(" + join(s, ", ") + ")";
}

SectionResult skipped(const std::string& name, const std::string& why)
{
    return {name, Status::skipped, {why}};
}

std::string gap_note(const OrbitRecord& rec)
{
    if (rec.kind == SystemKind::gap)
        return "spherical system not encoded (gap" + (rec.gap_reason.empty() ? "" : ": " + rec.gap_reason) + ")";
    if (rec.kind == SystemKind::rank0) return "rank-zero spherical system";
    return "no spherical system";
}

template <class T>
std::vector<T> sorted(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

using GenKey = std::tuple<IntVec, IntVec, IntVec>;

std::vector<GenKey> keys(const std::vector<GradedElement>& gens)
{
    std::vector<GenKey> out;
    for (const auto& g : gens) out.emplace_back(g.degrees, g.color, g.correction);
    return sorted(out);
}

}  // namespace

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    default: return "SKIPPED";
    }
}

bool CaseReport::has_failure() const
{
    return std::any_of(sections.begin(), sections.end(), [](const SectionResult& s) { return s.status == Status::fail; });
}

const SectionResult* CaseReport::section(const std::string& name) const
{
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

const std::vector<std::string>& section_names()
{
    static const std::vector<std::string> names{"triples", "covering", "low-triples", "normality", "semigroup"};
    return names;
}

const ChevalleyAlgebra& CaseRunner::algebra(const SimpleType& t)
{
    auto& slot = algebras_[t.name()];
    if (!slot) slot = std::make_unique<ChevalleyAlgebra>(RootSystem(t));
    return *slot;
}

SectionResult CaseRunner::triples(const OrbitRecord& rec)
{
    SectionResult s{"triples", Status::pass, {}};
    const PairInfo* pair = cat_.pair_of(rec);
    if (!rec.triple || !pair) return skipped("triples", "no normal triple recorded");
    const ChevalleyAlgebra& alg = algebra(pair->g);
    auto fail = [&](const std::string& msg) {
        s.status = Status::fail;
        s.lines.push_back(msg);
    };
    NormalTriple t;
    t.case_id = rec.id;
    try {
        t.e = parse_element(alg, rec.triple->e);
        t.h = parse_element(alg, rec.triple->h);
        t.f = parse_element(alg, rec.triple->f);
    } catch (const std::exception& ex) {
        fail(std::string("unparsable triple: ") + ex.what());
        return s;
    }
    TripleReport tr = verify_triple(alg, t);
    for (const auto& f : tr.failures) fail(f);
    if (!tr.sl2_ok || !tr.cartan_ok) {
        if (tr.failures.empty()) fail("not an sl2-triple");
        return s;
    }
    int cdim = centralizer_dim(alg, t.e);
    Grading gr = ad_grading(alg, t.h);
    s.lines.push_back("sl2 relations hold in " + pair->g.name() + "; dim g^e = " + std::to_string(cdim) +
                      "; ad(h) height " + std::to_string(gr.height));
    if (rec.erratum)
        s.lines.push_back("corrected " + rec.erratum->field + " (printed " + rec.erratum->printed +
                          "): " + rec.erratum->note);
    if (rec.alias_of) {
        const OrbitRecord* a = cat_.find(*rec.alias_of);
        if (a && a->triple) {
            try {
                int other = centralizer_dim(alg, parse_element(alg, a->triple->e));
                if (other != cdim)
                    fail("dim g^e = " + std::to_string(cdim) + " differs from " + a->id + " (" + std::to_string(other) +
                         ")");
                else
                    s.lines.push_back("orbit dimension agrees with " + a->id);
            } catch (const std::exception& ex) {
                fail("alias " + a->id + ": " + ex.what());
            }
        }
    }
    return s;
}

SectionResult CaseRunner::covering(const OrbitRecord& rec, int bound)
{
    const SphericalSystem* sys = cat_.system_of(rec);
    if (!sys) return skipped("covering", gap_note(rec));
    if (!rec.expected.covering) return skipped("covering", "no expected covering differences");
    SectionResult s{"covering", Status::pass, {}};
    auto got = covering_differences(*sys, bound);
    std::vector<SigmaVector> gammas;
    for (const auto& cd : got.items) {
        gammas.push_back(cd.gamma);
        s.lines.push_back(format_sigma_vector(*sys, cd.gamma) + " : " + format_color_vector(*sys, cd.plus) + " > " +
                          format_color_vector(*sys, cd.minus));
    }
    if (sorted(gammas) != sorted(*rec.expected.covering)) {
        s.status = Status::fail;
        std::vector<std::string> exp;
        for (const auto& g : *rec.expected.covering) exp.push_back(format_sigma_vector(*sys, g));
        s.lines.push_back("expected: " + join(exp, ", "));
    }
    auto wider = covering_differences(*sys, 2 * bound);
    if (wider.items.size() != got.items.size()) {
        s.status = Status::fail;
        s.lines.push_back("not stable: " + std::to_string(wider.items.size()) + " differences at bound " +
                          std::to_string(2 * bound));
    }
    return s;
}

SectionResult CaseRunner::low_triples(const OrbitRecord& rec, int bound)
{
    const SphericalSystem* sys = cat_.system_of(rec);
    if (!sys) return skipped("low-triples", gap_note(rec));
    if (!rec.expected.low_triples) return skipped("low-triples", "no expected low triples");
    SectionResult s{"low-triples", Status::pass, {}};
    auto got = low_fundamental_triples(*sys, bound);
    using Key = std::tuple<int, int, IntVec, IntVec>;
    std::vector<Key> g, e;
    for (const auto& t : got.items) {
        g.emplace_back(t.d, t.e, t.f, t.gamma);
        s.lines.push_back("(" + sys->colors[t.d] + ", " + sys->colors[t.e] + ", " + format_color_vector(*sys, t.f) +
                          ") from " + format_sigma_vector(*sys, t.gamma));
    }
    for (const auto& w : got.warnings) s.lines.push_back("warning: " + w);
    for (const auto& t : *rec.expected.low_triples) e.emplace_back(t.d, t.e, t.f, t.gamma);
    if (sorted(g) != sorted(e)) {
        s.status = Status::fail;
        s.lines.push_back("expected " + std::to_string(e.size()) + " triples, got " + std::to_string(g.size()));
    }
    return s;
}

SectionResult CaseRunner::normality_section(const OrbitRecord& rec, std::optional<bool>& verdict)
{
    if (!rec.expected.normal) return skipped("normality", "no expected verdict");
    SectionResult s{"normality", Status::pass, {}};
    bool expected = *rec.expected.normal;
    if (rec.kind == SystemKind::rank0) {
        verdict = true;
        s.lines.push_back("NORMAL; no spherical roots, every element is minuscule");
    } else {
        const SphericalSystem* sys = cat_.system_of(rec);
        if (!sys) return skipped("normality", gap_note(rec));
        if (rec.divisors.empty()) return skipped("normality", "no divisor D_p recorded");
        NormalityVerdict v = normality(*sys, rec.divisors);
        verdict = v.normal;
        if (v.normal) {
            std::vector<std::string> ds;
            for (const auto& d : rec.divisors) ds.push_back(format_color_vector(*sys, d));
            s.lines.push_back("NORMAL; minuscule: " + join(ds, ", "));
        }
        for (const auto& [i, m] : v.witnesses) {
            s.lines.push_back("NOT NORMAL; witness gamma = " + format_sigma_vector(*sys, m.witness) + "; D_p - gamma = " +
                              format_color_vector(*sys, m.remainder));
            if (rec.expected.witness &&
                (m.witness != rec.expected.witness->gamma || m.remainder != rec.expected.witness->remainder)) {
                s.status = Status::fail;
                s.lines.push_back("expected witness " + format_sigma_vector(*sys, rec.expected.witness->gamma) +
                                  " with remainder " + format_color_vector(*sys, rec.expected.witness->remainder));
            }
        }
    }
    if (*verdict != expected) {
        s.status = Status::fail;
        s.lines.push_back(std::string("expected ") + (expected ? "normal" : "not normal"));
    }
    return s;
}

SectionResult CaseRunner::semigroup(const OrbitRecord& rec, int bound)
{
    const auto& ex = rec.expected;
    if (!ex.generators && !ex.same_as && !ex.gamma_sigma) return skipped("semigroup", "no expected semigroup data");
    const SphericalSystem* sys = cat_.system_of(rec);
    if (!sys) return skipped("semigroup", gap_note(rec));
    SectionResult s{"semigroup", Status::pass, {}};
    auto fail = [&](const std::string& msg) {
        s.status = Status::fail;
        s.lines.push_back(msg);
    };
    try {
        for (std::size_t i = 0; i < rec.divisors.size() && i < rec.lambda_star.size(); ++i) {
            Weight w = omega(*sys, rec.divisors[i]);
            if (w != rec.lambda_star[i])
                fail("omega(" + format_color_vector(*sys, rec.divisors[i]) + ") = " + format_weight(*sys, w) +
                     ", expected " + format_weight(*sys, rec.lambda_star[i]));
        }
        const PairInfo* pair = cat_.pair_of(rec);
        if (!rec.charges.empty() && pair && pair->hermitian_root) {
            i64 m = hermitian_exponent(RootSystem(pair->g), *pair->hermitian_root);
            for (i64 c : rec.charges)
                if (c != m && c != -m) fail("central charge " + std::to_string(c) + " is not +-" + std::to_string(m));
            if (s.status == Status::pass) s.lines.push_back("central charges +-" + std::to_string(m));
        }
        if (ex.gamma_sigma) {
            auto d = gamma_sigma(*sys, ex.gamma_sigma->allowed, bound);
            std::vector<SigmaVector> got;
            for (const auto& g : d.generators) {
                got.push_back(g.correction);
                s.lines.push_back(format_sigma_vector(*sys, g.correction) + " = " + format_color_vector(*sys, g.color));
            }
            if (sorted(got) != sorted(ex.gamma_sigma->generators)) fail("generators of Gamma^Sigma differ from expected");
            if (!d.stable) fail("generators not stable at bound " + std::to_string(2 * bound));
            if (!generators_minimal(d)) fail("generator set is not minimal");
        }
        if (ex.generators || ex.same_as) {
            auto d = gamma_multi(*sys, rec.divisors, bound);
            for (const auto& g : d.generators)
                s.lines.push_back(format_ints(g.degrees) + " " + format_color_vector(*sys, g.color) + " = " +
                                  format_color_vector(*sys, [&] {
                                      ColorVector v(sys->num_colors(), 0);
                                      for (std::size_t i = 0; i < rec.divisors.size(); ++i)
                                          for (std::size_t k = 0; k < v.size(); ++k)
                                              v[k] += g.degrees[i] * rec.divisors[i][k];
                                      return v;
                                  }()) +
                                  " - (" + format_sigma_vector(*sys, g.correction) + ")");
            if (!d.stable) fail("generators not stable at bound " + std::to_string(2 * bound));
            if (!generators_minimal(d)) fail("generator set is not minimal");
            if (ex.generators) {
                std::vector<GradedElement> exp;
                for (const auto& g : *ex.generators) exp.push_back({g.n, g.color, g.corr});
                if (keys(d.generators) != keys(exp))
                    fail("expected " + std::to_string(exp.size()) + " generators, got " +
                         std::to_string(d.generators.size()));
            }
            if (ex.free && *ex.free != d.free) fail(std::string("expected ") + (*ex.free ? "free" : "not free"));
            if (d.free) s.lines.push_back("freely generated");
            if (ex.same_as) {
                const OrbitRecord* o = cat_.find(*ex.same_as);
                const SphericalSystem* osys = o ? cat_.system_of(*o) : nullptr;
                if (!osys) {
                    fail("comparison case " + *ex.same_as + " has no spherical system");
                } else {
                    auto od = gamma_multi(*osys, o->divisors, bound, false);
                    using Key = std::pair<IntVec, IntVec>;
                    std::vector<Key> a, b;
                    for (const auto& g : d.generators) a.emplace_back(g.degrees, g.correction);
                    for (const auto& g : od.generators) b.emplace_back(g.degrees, g.correction);
                    if (sorted(a) != sorted(b)) fail("generators differ from case " + o->id);
                    else s.lines.push_back("same generators as case " + o->id);
                }
            }
            if (!rec.lambda_star.empty()) {
                for (const auto& w : weight_semigroup(*sys, rec.divisors, rec.lambda_star, rec.charges, d)) {
                    std::string line = "weight " + format_weight(*sys, w.weight);
                    if (!rec.charges.empty()) line += " charge " + std::to_string(w.charge);
                    s.lines.push_back(line);
                }
            }
        }
    } catch (const std::exception& e) {
        fail(e.what());
    }
    return s;
}

CaseReport CaseRunner::run(const OrbitRecord& rec, const RunOptions& opts)
{
    CaseReport r;
    r.id = rec.id;
    int bound = opts.bound.value_or(default_bound);
    auto want = [&](const std::string& n) { return opts.sections.empty() || opts.sections.count(n); };
    if (want("triples")) r.sections.push_back(triples(rec));
    if (want("covering")) r.sections.push_back(covering(rec, bound));
    if (want("low-triples")) r.sections.push_back(low_triples(rec, bound));
    if (want("normality")) r.sections.push_back(normality_section(rec, r.normal));
    if (want("semigroup")) r.sections.push_back(semigroup(rec, bound));
    return r;
}

CaseReport run_case(const Catalog& cat, const OrbitRecord& rec, const RunOptions& opts)
{
    CaseRunner runner(cat);
    return runner.run(rec, opts);
}

Summary summarize(const std::vector<CaseReport>& reports)
{
    Summary s;
    for (const auto& r : reports) {
        for (const auto& sec : r.sections) {
            if (sec.status == Status::pass) ++s.pass;
            else if (sec.status == Status::fail) ++s.fail;
            else ++s.skipped;
        }
        if (!r.normal) ++s.undecided;
        else if (*r.normal) ++s.normal;
        else {
            ++s.non_normal;
            s.non_normal_ids.push_back(r.id);
        }
    }
    return s;
}

std::string render_text(const CaseReport& r)
{
    std::ostringstream os;
    os << "case " << r.id << "\n";
    for (const auto& s : r.sections) {
        os << "  [" << status_name(s.status) << "] " << s.name << "\n";
        for (const auto& l : s.lines) os << "      " << l << "\n";
    }
    return os.str();
}

std::string render_summary_text(const Summary& s)
{
    std::ostringstream os;
    os << "summary: " << s.pass << " PASS, " << s.fail << " FAIL, " << s.skipped << " SKIPPED\n";
    os << "normality: " << s.normal << " normal, " << s.non_normal << " not normal";
    if (!s.non_normal_ids.empty()) os << " (" << join(s.non_normal_ids, ", ") << ")";
    os << ", " << s.undecided << " undecided\n";
    return os.str();
}

std::string render_structured(const std::vector<CaseReport>& reports, const Summary& s, int catalog_version)
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = catalog_version;
    ordered_json cases = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json c;
        c["id"] = r.id;
        c["normal"] = r.normal ? ordered_json(*r.normal) : ordered_json(nullptr);
        ordered_json secs = ordered_json::array();
        for (const auto& sec : r.sections)
            secs.push_back({{"name", sec.name}, {"status", status_name(sec.status)}, {"lines", sec.lines}});
        c["sections"] = secs;
        cases.push_back(c);
    }
    doc["cases"] = cases;
    doc["summary"] = {{"pass", s.pass},
                      {"fail", s.fail},
                      {"skipped", s.skipped},
                      {"normal", s.normal},
                      {"non_normal", s.non_normal},
                      {"undecided", s.undecided},
                      {"non_normal_ids", s.non_normal_ids}};
    return doc.dump(2) + "\n";
}

}  // namespace sphnorm
