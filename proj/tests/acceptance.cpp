#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "sphnorm/report.hpp"

using namespace sphnorm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool cond, const std::string& msg)
    {
        if (!cond && ok) why << msg;
        ok = ok && cond;
    }
};

const Catalog& catalog()
{
    static Catalog cat = load_catalog(default_catalog_path());
    return cat;
}

const SphericalSystem& sys(const std::string& name) { return catalog().systems.at(name); }

std::set<SigmaVector> parse_set(const SphericalSystem& s, const std::vector<std::string>& v)
{
    std::set<SigmaVector> out;
    for (const auto& x : v) out.insert(parse_linear(x, s.sigma_names));
    return out;
}

const std::vector<std::string> case_a_covering{"s1", "s2", "s3", "s1 + s2", "s2 + s3", "s2 + 2s3", "s1 + s2 + s3"};
const std::map<std::string, std::vector<std::string>> frozen_covering{
    {"A", case_a_covering},
    {"B", {"s1", "s2", "s3", "s1 + s2", "s1 + s3", "s2 + s3"}},
    {"C", {"s1", "s2", "s3", "s1 + s2", "s1 + s3"}},
    {"D", case_a_covering},
};

Check criterion1()
{
    Check c;
    for (const auto& [name, list] : frozen_covering) {
        const auto& s = sys(name);
        std::set<SigmaVector> want = parse_set(s, list);
        std::set<SigmaVector> got, wide;
        for (const auto& cd : covering_differences(s, 8).items) got.insert(cd.gamma);
        for (const auto& cd : covering_differences(s, 16).items) wide.insert(cd.gamma);
        c.expect(got == want, "case " + name + " differs at bound 8");
        c.expect(wide == want, "case " + name + " not stable at bound 16");
    }
    return c;
}

Check criterion2()
{
    Check c;
    const std::map<std::string, std::size_t> sizes{{"A", 7}, {"B", 6}, {"C", 5}, {"D", 7}};
    for (const auto& [name, n] : sizes) {
        const auto& s = sys(name);
        const auto& exp = *catalog().find(name)->expected.low_triples;
        auto got = low_fundamental_triples(s, 8);
        using Key = std::tuple<int, int, IntVec, IntVec>;
        std::set<Key> g, e;
        for (const auto& t : got.items) g.emplace(t.d, t.e, t.f, t.gamma);
        for (const auto& t : exp) e.emplace(std::min(t.d, t.e), std::max(t.d, t.e), t.f, t.gamma);
        c.expect(got.items.size() == n && e.size() == n, "case " + name + " has the wrong number of triples");
        c.expect(g == e, "case " + name + " triples differ");
        c.expect(got.warnings.empty(), "case " + name + " reported height warnings");
    }
    return c;
}

Check criterion3()
{
    Check c;
    const std::map<std::string, std::size_t> counts{{"1.3", 4}, {"2.5", 5}, {"3.9", 3}, {"5.8", 10},
                                                    {"7.12", 3}, {"8.6", 8}, {"12.2", 2}};
    for (const auto& [id, n] : counts) {
        const OrbitRecord& rec = *catalog().find(id);
        const SphericalSystem& s = *catalog().system_of(rec);
        auto t0 = Clock::now();
        if (rec.expected.gamma_sigma) {
            auto d = gamma_sigma(s, rec.expected.gamma_sigma->allowed, 8);
            std::set<SigmaVector> got;
            for (const auto& g : d.generators) got.insert(g.correction);
            std::set<SigmaVector> want(rec.expected.gamma_sigma->generators.begin(),
                                       rec.expected.gamma_sigma->generators.end());
            c.expect(got == want && got.size() == n, "case " + id + " Gamma^Sigma generators differ");
            c.expect(d.stable, "case " + id + " not stable");
        } else {
            auto d = gamma_multi(s, rec.divisors, 8);
            using Key = std::tuple<IntVec, IntVec, IntVec>;
            std::set<Key> got, want;
            for (const auto& g : d.generators) got.emplace(g.degrees, g.color, g.correction);
            for (const auto& g : *rec.expected.generators) want.emplace(g.n, g.color, g.corr);
            c.expect(got == want && got.size() == n, "case " + id + " generators differ");
            c.expect(d.stable, "case " + id + " not stable");
            if (id == "1.3") {
                c.expect(d.free, "case 1.3 not freely generated");
                // D1 = 2D3 - (s2 + 2s3)
                Key printed{{2}, parse_linear("D1", s.colors), parse_linear("s2 + 2s3", s.sigma_names)};
                c.expect(got.count(printed) == 1, "case 1.3 misses D1 = 2D3 - (s2 + 2s3)");
            }
        }
        double dt = seconds_since(t0);
        c.expect(dt < 10.0, "case " + id + " took " + std::to_string(dt) + " s");
    }
    return c;
}

Check criterion4()
{
    Check c;
    const OrbitRecord& r39 = *catalog().find("3.9");
    const OrbitRecord& r712 = *catalog().find("7.12");
    const SphericalSystem& s39 = *catalog().system_of(r39);
    const SphericalSystem& s712 = *catalog().system_of(r712);
    std::size_t checked = 0;
    for (i64 a1 = 0; a1 <= 12; ++a1)
        for (i64 a2 = 0; a2 <= 12; ++a2)
            for (i64 a3 = 0; a3 <= 12; ++a3) {
                SigmaVector g{a1, a2, a3};
                c.expect(in_gamma_sigma(s39, r39.expected.gamma_sigma->allowed, g) == (a1 + a2 <= a3),
                         "3.9 disagrees at " + format_sigma_vector(s39, g));
                c.expect(in_gamma_sigma(s712, r712.expected.gamma_sigma->allowed, g) ==
                             (std::max(a2, a3) <= a1 && a1 <= a2 + a3),
                         "7.12 disagrees at " + format_sigma_vector(s712, g));
                checked += 2;
            }
    c.expect(checked == 2 * 13 * 13 * 13, "incomplete sweep");
    return c;
}

Check criterion5()
{
    Check c;
    CaseRunner runner(catalog());
    RunOptions o;
    o.sections = {"normality"};
    std::vector<CaseReport> reps;
    for (const auto& rec : catalog().cases) reps.push_back(runner.run(rec, o));
    Summary s = summarize(reps);
    c.expect(s.fail == 0, "normality section failures");
    c.expect(s.non_normal == 1 && s.non_normal_ids == std::vector<std::string>{"12.2"},
             "census found " + std::to_string(s.non_normal) + " non-normal cases");
    const OrbitRecord& rec = *catalog().find("12.2");
    const PairInfo* pair = catalog().pair_of(rec);
    c.expect(pair && pair->g.name() == "G2" && pair->k == "A1 x A1" && rec.kd_k == "(1; 3)", "12.2 metadata");
    const SphericalSystem& s12 = *catalog().system_of(rec);
    auto v = normality(s12, rec.divisors);
    c.expect(!v.normal && v.witnesses.size() == 1, "12.2 has no witness");
    if (!v.witnesses.empty())
        c.expect(format_color_vector(s12, v.witnesses[0].second.remainder) == "D1 + D3",
                 "12.2 remainder is " + format_color_vector(s12, v.witnesses[0].second.remainder));
    return c;
}

Check criterion6()
{
    Check c;
    c.expect(hermitian_exponent(RootSystem(parse_simple_type("E6")), 0) == 3, "(E6, a1)");
    c.expect(hermitian_exponent(RootSystem(parse_simple_type("E6")), 5) == 3, "(E6, a6)");
    c.expect(hermitian_exponent(RootSystem(parse_simple_type("E7")), 6) == 2, "(E7, a7)");
    return c;
}

Check criterion7()
{
    Check c;
    auto t0 = Clock::now();
    std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> algs;
    auto alg = [&](const SimpleType& t) -> const ChevalleyAlgebra& {
        auto& a = algs[t.name()];
        if (!a) a = std::make_unique<ChevalleyAlgebra>(RootSystem(t));
        return *a;
    };
    std::size_t triples = 0;
    for (const auto& rec : catalog().cases) {
        if (!rec.triple) continue;
        const auto& a = alg(catalog().pair_of(rec)->g);
        NormalTriple t{rec.id, parse_element(a, rec.triple->e), parse_element(a, rec.triple->h),
                       parse_element(a, rec.triple->f)};
        auto r = verify_triple(a, t);
        c.expect(r.sl2_ok && r.cartan_ok, "triple " + rec.id + " fails");
        ++triples;
    }
    c.expect(triples == 60, "expected 60 triples, found " + std::to_string(triples));
    for (const char* t : {"G2", "F4"}) {
        auto r = check_jacobi_exhaustive(alg(parse_simple_type(t)));
        c.expect(r.failures == 0 && r.checked > 0, std::string("Jacobi fails on ") + t);
    }
    for (const char* t : {"E6", "E7", "E8"}) {
        auto r = check_jacobi_random(alg(parse_simple_type(t)), 100000, 20260101);
        c.expect(r.failures == 0 && r.checked == 100000, std::string("Jacobi fails on ") + t);
    }
    const std::map<std::string, std::size_t> counts{{"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
    for (const auto& [t, n] : counts)
        c.expect(RootSystem(parse_simple_type(t)).num_positive() == n, "|R+| of " + t);
    c.expect(seconds_since(t0) < 120.0, "took longer than two minutes");
    return c;
}

Check criterion8()
{
    Check c;
    std::mt19937 rng(8);
    for (const auto& [name, s] : catalog().systems) {
        std::size_t nd = s.num_colors(), ns = s.num_sigma();
        auto rnd = [&](std::size_t n, int hi) {
            IntVec v(n);
            for (auto& x : v) x = static_cast<i64>(rng() % (hi + 1));
            return v;
        };
        auto plus = [](IntVec a, const IntVec& b) {
            for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
            return a;
        };
        for (int t = 0; t < 1000; ++t) {
            ColorVector d = rnd(nd, 3);
            SigmaVector a = rnd(ns, 2), b = rnd(ns, 2);
            ColorVector e = plus(d, sigma_to_colors(s, a));
            ColorVector f = plus(e, sigma_to_colors(s, b));
            c.expect(leq_sigma(s, d, d).has_value(), name + ": reflexivity");
            c.expect(leq_sigma(s, d, e) == a, name + ": D <= D + C a");
            c.expect(leq_sigma(s, d, f) == plus(a, b), name + ": transitivity");
            if (e != d) c.expect(!leq_sigma(s, e, d), name + ": antisymmetry");
        }
        for (std::size_t j = 0; j < ns; ++j) {
            Weight sum(s.simple_roots.size(), 0);
            for (std::size_t k = 0; k < nd; ++k) {
                ColorVector unit(nd, 0);
                unit[k] = 1;
                Weight w = omega(s, unit);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += s.pairing[k][j] * w[i];
            }
            Weight sigma(s.simple_roots.size(), 0);
            for (std::size_t k = 0; k < sum.size(); ++k)
                for (std::size_t i = 0; i < sum.size(); ++i) sigma[i] += s.sigma_roots[j][k] * s.cartan[k][i];
            c.expect(sum == sigma, name + ": omega consistency fails for " + s.sigma_names[j]);
        }
    }
    std::size_t sets = 0;
    for (const auto& rec : catalog().cases) {
        const SphericalSystem* s = catalog().system_of(rec);
        if (!s) continue;
        if (!rec.divisors.empty()) {
            c.expect(generators_minimal(gamma_multi(*s, rec.divisors, 8, false)), rec.id + ": non-minimal generators");
            ++sets;
        }
        if (rec.expected.gamma_sigma) {
            c.expect(generators_minimal(gamma_sigma(*s, rec.expected.gamma_sigma->allowed, 8, false)),
                     rec.id + ": non-minimal Gamma^Sigma generators");
            ++sets;
        }
    }
    c.expect(sets > 0, "no generator sets checked");
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"covering differences of cases A-D", criterion1},
        {"low fundamental triples of cases A-D", criterion2},
        {"semigroup generator lists", criterion3},
        {"Gamma^Sigma membership closed forms", criterion4},
        {"normality census", criterion5},
        {"Hermitian exponents", criterion6},
        {"Chevalley layer", criterion7},
        {"property suites", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why << "exception: " << e.what();
        }
        std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << " - " << criteria[i].first;
        if (!c.ok) std::cout << " (" << c.why.str() << ")";
        std::cout << " [" << seconds_since(t0) << " s]\n";
        if (!c.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
