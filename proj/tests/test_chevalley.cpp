#include <doctest.h>

#include <map>
#include <memory>

#include "sphnorm/catalog.hpp"
#include "sphnorm/chevalley.hpp"

using namespace sphnorm;

namespace {

const ChevalleyAlgebra& algebra(const std::string& t)
{
    static std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> cache;
    auto& a = cache[t];
    if (!a) a = std::make_unique<ChevalleyAlgebra>(RootSystem(parse_simple_type(t)));
    return *a;
}

// dim g^e and ad(h)-height for every recorded triple, checked against the grading identity below.
const std::map<std::string, std::pair<int, int>> frozen_orbits{
    {"1.1", {56, 2}},   {"1.2", {46, 2}},   {"1.3", {38, 3}},   {"2.1", {56, 2}},  {"2.2", {46, 2}},
    {"2.3", {46, 2}},   {"2.4", {38, 3}},   {"2.5", {38, 3}},   {"3.1", {56, 2}},  {"3.2", {56, 2}},
    {"3.3", {46, 2}},   {"3.4", {46, 2}},   {"3.5", {46, 2}},   {"3.6", {36, 4}},  {"3.7", {32, 4}},
    {"3.8", {32, 4}},   {"3.9", {30, 4}},   {"4.1", {46, 2}},   {"5.1", {99, 2}},  {"5.2", {81, 2}},
    {"5.3", {79, 2}},   {"5.4", {79, 2}},   {"5.5", {69, 3}},   {"5.8", {63, 3}},  {"5.9", {63, 3}},
    {"6.1", {99, 2}},   {"6.2", {81, 2}},   {"6.3", {81, 2}},   {"6.4", {69, 3}},  {"6.5", {69, 3}},
    {"7.1", {99, 2}},   {"7.2", {99, 2}},   {"7.3", {81, 2}},   {"7.4", {81, 2}},  {"7.5", {81, 2}},
    {"7.6", {79, 2}},   {"7.7", {79, 2}},   {"7.8", {79, 2}},   {"7.9", {79, 2}},  {"7.10", {67, 4}},
    {"7.11", {57, 4}},  {"7.12", {57, 4}},  {"8.1", {190, 2}},  {"8.2", {156, 2}}, {"8.3", {136, 3}},
    {"8.6", {120, 3}},  {"9.1", {190, 2}},  {"9.2", {156, 2}},  {"9.3", {156, 2}}, {"9.4", {136, 3}},
    {"9.5", {136, 3}},  {"10.1", {36, 2}},  {"10.2", {30, 2}},  {"10.3", {30, 2}}, {"10.4", {24, 3}},
    {"10.5", {24, 3}},  {"11.1", {30, 2}},  {"11.2", {22, 4}},  {"12.1", {8, 2}},  {"12.2", {6, 3}},
};

}  // namespace

TEST_CASE("algebra dimensions")
{
    CHECK(algebra("G2").dim() == 14);
    CHECK(algebra("F4").dim() == 52);
    CHECK(algebra("E6").dim() == 78);
    CHECK(algebra("E7").dim() == 133);
    CHECK(algebra("E8").dim() == 248);
}

TEST_CASE("Jacobi identity")
{
    for (const char* t : {"G2", "F4", "B3", "C3", "D4"}) {
        auto r = check_jacobi_exhaustive(algebra(t));
        CHECK_MESSAGE(r.failures == 0, std::string(t));
        CHECK(r.checked > 0);
    }
    for (const char* t : {"E6", "E7", "E8"}) {
        auto r = check_jacobi_random(algebra(t), 20000, 11);
        CHECK_MESSAGE(r.failures == 0, std::string(t));
        CHECK(r.checked == 20000);
    }
}

TEST_CASE("Chevalley basis relations")
{
    const auto& alg = algebra("F4");
    const auto& rs = alg.root_system();
    for (const auto& a : rs.positive_roots()) {
        Root neg(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
        CHECK(bracket(alg, x_root(alg, a), x_root(alg, neg)) == h_root(alg, a));
        // [h_a, e_a] = 2 e_a
        AlgebraElement two = x_root(alg, a);
        for (auto& c : two) c *= 2;
        CHECK(bracket(alg, h_root(alg, a), x_root(alg, a)) == two);
    }
    for (const auto& a : rs.positive_roots())
        for (const auto& b : rs.positive_roots()) {
            i64 n = alg.structure_constant(a, b);
            Root s(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
            if (!rs.is_root(s)) {
                CHECK(n == 0);
                continue;
            }
            // |N_{a,b}| = p + 1 where b - p a is the bottom of the a-string through b
            int p = 0;
            Root t = b;
            while (true) {
                for (std::size_t k = 0; k < t.size(); ++k) t[k] -= a[k];
                if (!rs.is_root(t)) break;
                ++p;
            }
            CHECK(std::abs(n) == p + 1);
        }
}

TEST_CASE("element parsing and formatting")
{
    const auto& alg = algebra("E6");
    auto x = parse_element(alg, "x_101111 - y_001100 + 2*h_122321 + h_a1");
    auto y = parse_element(alg, format_element(alg, x));
    CHECK(x == y);
    CHECK_THROWS(parse_element(alg, "x_101011"));
    CHECK_THROWS(parse_element(alg, "x_1011"));
    CHECK_THROWS(parse_element(alg, "z_100000"));
    CHECK_THROWS(parse_element(algebra("E8"), "y_13243321"));
}

TEST_CASE("triple verification rejects corrupted triples")
{
    const auto& alg = algebra("G2");
    NormalTriple good{"12.2", parse_element(alg, "x_21"), parse_element(alg, "h_21"), parse_element(alg, "y_21")};
    auto r = verify_triple(alg, good);
    CHECK(r.sl2_ok);
    CHECK(r.cartan_ok);
    NormalTriple bad = good;
    bad.f = parse_element(alg, "2*y_21");
    r = verify_triple(alg, bad);
    CHECK_FALSE(r.sl2_ok);
    CHECK_FALSE(r.failures.empty());
    NormalTriple offcartan{"x", parse_element(alg, "x_10"), parse_element(alg, "x_10"), parse_element(alg, "y_10")};
    CHECK_FALSE(verify_triple(alg, offcartan).cartan_ok);
}

TEST_CASE("every recorded triple is an sl2-triple with the frozen orbit data")
{
    Catalog cat = load_catalog(default_catalog_path());
    std::size_t seen = 0;
    for (const auto& rec : cat.cases) {
        if (!rec.triple) continue;
        ++seen;
        const auto& alg = algebra(cat.pair_of(rec)->g.name());
        NormalTriple t{rec.id, parse_element(alg, rec.triple->e), parse_element(alg, rec.triple->h),
                       parse_element(alg, rec.triple->f)};
        auto r = verify_triple(alg, t);
        CHECK_MESSAGE(r.sl2_ok, rec.id);
        CHECK_MESSAGE(r.cartan_ok, rec.id);
        Grading g = ad_grading(alg, t.h);
        int cdim = centralizer_dim(alg, t.e);
        // for an sl2-triple, dim g^e = dim g_0 + dim g_1
        CHECK_MESSAGE(cdim == g.dims[0] + g.dims[1], rec.id);
        auto it = frozen_orbits.find(rec.id);
        REQUIRE_MESSAGE(it != frozen_orbits.end(), rec.id);
        CHECK_MESSAGE(cdim == it->second.first, rec.id);
        CHECK_MESSAGE(g.height == it->second.second, rec.id);
    }
    CHECK(seen == frozen_orbits.size());
}
