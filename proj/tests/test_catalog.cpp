#include <doctest.h>

#include "sphnorm/catalog.hpp"

using namespace sphnorm;

namespace {

const Catalog& catalog()
{
    static Catalog cat = load_catalog(default_catalog_path());
    return cat;
}

std::string data(const std::string& f) { return std::string(SPHNORM_TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("linear expressions")
{
    std::vector<std::string> sym{"D1", "D2", "D10"};
    CHECK(parse_linear("2D1 - D2", sym) == IntVec{2, -1, 0});
    CHECK(parse_linear(" -D10 + 3*D2 + D1 ", sym) == IntVec{1, 3, -1});
    CHECK(parse_linear("0", sym) == IntVec{0, 0, 0});
    CHECK(parse_linear("D1 + D1", sym) == IntVec{2, 0, 0});
    CHECK_THROWS(parse_linear("", sym));
    CHECK_THROWS(parse_linear("D3", sym));
    CHECK_THROWS(parse_linear("D1 D2", sym));
    CHECK_THROWS(parse_linear("2", sym));
}

TEST_CASE("shipped catalog")
{
    const auto& cat = catalog();
    CHECK(cat.version == 1);
    CHECK(cat.pairs.size() == 12);
    CHECK(cat.systems.size() == 16);
    CHECK(cat.cases.size() == 64);
    CHECK(cat.gap_count() == 29);
    const auto* r = cat.find("12.2");
    REQUIRE(r);
    CHECK(r->expected.normal == false);
    CHECK(r->kd_k == "(1; 3)");
    CHECK(cat.pair_of(*r)->name == "G2/A1xA1");
    std::size_t non_normal = 0;
    for (const auto& c : cat.cases)
        if (c.expected.normal == false) ++non_normal;
    CHECK(non_normal == 1);
}

TEST_CASE("aliases")
{
    const auto* r = catalog().find("3.2");
    REQUIRE(r);
    REQUIRE(r->alias_of);
    CHECK(*r->alias_of == "3.1");
    for (const auto& c : catalog().cases)
        if (c.alias_of) CHECK_MESSAGE(catalog().find(*c.alias_of), c.id);
}

TEST_CASE("every orbit record has a triple and a verdict")
{
    for (const auto& c : catalog().cases) {
        if (!c.pair) continue;
        CHECK_MESSAGE(c.triple, c.id);
        CHECK_MESSAGE(c.expected.normal, c.id);
    }
}

TEST_CASE("Hermitian pairs carry their simple root")
{
    for (const auto& p : catalog().pairs) {
        if (p.id == 3) CHECK(p.hermitian_root == 0);
        else if (p.id == 7) CHECK(p.hermitian_root == 6);
        else CHECK_FALSE(p.hermitian_root);
    }
}

TEST_CASE("empty and malformed catalogs")
{
    CHECK(load_catalog_text("").cases.empty());
    CHECK(load_catalog_text("# only a comment\n").pairs.empty());
    CHECK_THROWS_WITH_AS(load_catalog_text("pairs: []\n"), doctest::Contains("version"), CatalogError);
    CHECK_THROWS_WITH_AS(load_catalog_text("version: 2\n"), doctest::Contains("unsupported"), CatalogError);
    CHECK_THROWS_WITH_AS(load_catalog_text("version: [1\n"), doctest::Contains("line"), CatalogError);
    CHECK_THROWS_WITH_AS(load_catalog(data("broken_record.yaml")),
                         doctest::Contains("record 9.9 (line 5): alias target '9.8' does not exist"), CatalogError);
    CHECK_THROWS_AS(load_catalog(data("missing.yaml")), CatalogError);
}

TEST_CASE("invalid systems are rejected at load time")
{
    std::string text = R"(version: 1
systems:
  - name: "bad"
    ambient: [A1, A1]
    sp: []
    sigma:
      - {name: s1, root: "a1 + b1", colors: "D1"}
    colors:
      - {name: D1, roots: [a1, b1]}
)";
    CHECK_THROWS_WITH_AS(load_catalog_text(text), doctest::Contains("system bad"), CatalogError);
    auto ok = load_catalog(data("minimal.yaml"));
    CHECK(ok.systems.size() == 1);
    CHECK(ok.cases.size() == 1);
    CHECK(ok.cases[0].kind == SystemKind::rank0);
}

TEST_CASE("unknown references in records")
{
    std::string base = "version: 1\npairs:\n  - {id: 12, name: \"G2/A1xA1\", g: G2, k: \"A1 x A1\"}\ncases:\n";
    CHECK_THROWS_WITH(load_catalog_text(base + "  - {id: \"1\", pair: 13}\n"), doctest::Contains("unknown pair 13"));
    CHECK_THROWS_WITH(load_catalog_text(base + "  - {id: \"1\", system: nowhere}\n"),
                      doctest::Contains("unknown system"));
    CHECK_THROWS_WITH(load_catalog_text(base + "  - {id: \"1\", pair: 12}\n"), doctest::Contains("expected.normal"));
    CHECK_THROWS_WITH(load_catalog_text(base + "  - {id: \"1\"}\n  - {id: \"1\"}\n"), doctest::Contains("duplicate"));
}
