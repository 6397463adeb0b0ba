#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sphnorm/catalog.hpp"
#include "sphnorm/poset.hpp"

using namespace sphnorm;

namespace {

const Catalog& catalog()
{
    static Catalog cat = load_catalog(default_catalog_path());
    return cat;
}

const SphericalSystem& sys(const std::string& name) { return catalog().systems.at(name); }

ColorVector random_color(std::mt19937& rng, std::size_t n, int hi)
{
    ColorVector v(n);
    for (auto& x : v) x = static_cast<i64>(rng() % (hi + 1));
    return v;
}

ColorVector add(ColorVector a, const ColorVector& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

}  // namespace

TEST_CASE("leq_sigma examples")
{
    const auto& a = sys("A");
    auto r = leq_sigma(a, ColorVector{0, 1, 0, 0}, ColorVector{2, 0, 0, 0});
    REQUIRE(r);
    CHECK(*r == SigmaVector{1, 0, 0});
    CHECK_FALSE(leq_sigma(a, ColorVector{2, 0, 0, 0}, ColorVector{0, 1, 0, 0}));
    CHECK_FALSE(leq_sigma(a, ColorVector{1, 0, 0, 0}, ColorVector{0, 1, 0, 0}));
    CHECK(leq_sigma(a, ColorVector{1, 1, 1, 1}, ColorVector{1, 1, 1, 1}) == SigmaVector{0, 0, 0});
    CHECK_THROWS(leq_sigma(a, ColorVector{1}, ColorVector{1, 0, 0, 0}));
}

TEST_CASE("partial order axioms on random pairs")
{
    std::mt19937 rng(2024);
    for (const auto& [name, s] : catalog().systems) {
        std::size_t nd = s.num_colors(), ns = s.num_sigma();
        for (int t = 0; t < 1000; ++t) {
            ColorVector d = random_color(rng, nd, 3);
            SigmaVector a(ns), b(ns);
            for (auto& x : a) x = static_cast<i64>(rng() % 3);
            for (auto& x : b) x = static_cast<i64>(rng() % 3);
            ColorVector e = add(d, sigma_to_colors(s, a));
            ColorVector f = add(e, sigma_to_colors(s, b));
            CHECK(leq_sigma(s, d, d) == SigmaVector(ns, 0));
            auto de = leq_sigma(s, d, e);
            REQUIRE_MESSAGE(de, name);
            CHECK(*de == a);
            auto df = leq_sigma(s, d, f);
            REQUIRE_MESSAGE(df, name);  // transitivity
            if (e != d) CHECK_FALSE(leq_sigma(s, e, d));  // antisymmetry
            ColorVector g = random_color(rng, nd, 3);
            if (leq_sigma(s, d, g) && leq_sigma(s, g, d)) CHECK(g == d);
        }
    }
}

TEST_CASE("covering differences agree with the lookup-table oracle")
{
    for (const char* name : {"A", "B", "C", "D", "1.3", "2.5"}) {
        const auto& s = sys(name);
        auto table = oracle::image_table(s, 5);
        auto got = covering_differences(s, 5);
        std::set<SigmaVector> lib;
        for (const auto& cd : got.items) lib.insert(cd.gamma);
        std::set<SigmaVector> want;
        for (const auto& [v, g] : table)
            if (!oracle::zero(g) && oracle::covering(s, table, g)) want.insert(g);
        CHECK_MESSAGE(lib == want, std::string(name));
    }
}

TEST_CASE("covering differences are sorted by degree then descending")
{
    auto r = covering_differences(sys("A"));
    REQUIRE(r.items.size() == 7);
    CHECK(r.items[0].gamma == SigmaVector{1, 0, 0});
    CHECK(r.items[2].gamma == SigmaVector{0, 0, 1});
    CHECK(r.items[3].gamma == SigmaVector{1, 1, 0});
    CHECK(r.items[6].gamma == SigmaVector{0, 1, 2});
    CHECK_THROWS(covering_differences(sys("A"), 0));
}

TEST_CASE("low triples have no height warnings on the basic systems")
{
    for (const char* name : {"A", "B", "C", "D"}) {
        auto r = low_fundamental_triples(sys(name));
        CHECK(r.warnings.empty());
        for (const auto& t : r.items) CHECK(t.d <= t.e);
    }
}

TEST_CASE("minuscule test agrees with box search")
{
    std::mt19937 rng(99);
    for (const auto& [name, s] : catalog().systems) {
        auto table = oracle::image_table(s, 4);
        for (int t = 0; t < 60; ++t) {
            ColorVector d = random_color(rng, s.num_colors(), 2);
            bool want = true;
            for (const auto& [v, a] : table)
                if (!oracle::zero(a) && oracle::nonneg(oracle::sub(d, v))) want = false;
            auto r = is_minuscule(s, d);
            CHECK_MESSAGE(r.minuscule == want, name);
            if (!r.minuscule) CHECK(add(r.remainder, sigma_to_colors(s, r.witness)) == d);
        }
    }
    CHECK_THROWS(is_minuscule(sys("A"), ColorVector{-1, 0, 0, 0}));
}

TEST_CASE("the non-normal witness")
{
    const auto& s = sys("12.2");
    auto r = is_minuscule(s, ColorVector{2, 1, 1});
    CHECK_FALSE(r.minuscule);
    CHECK(r.witness == SigmaVector{1});
    CHECK(r.remainder == ColorVector{1, 0, 1});
    CHECK(is_minuscule(s, ColorVector{1, 0, 1}).minuscule);
}
