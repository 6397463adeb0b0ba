import pytest

import sphnorm


@pytest.fixture(scope="module")
def catalog():
    return sphnorm.load_catalog()


def test_root_system_counts():
    assert [sphnorm.positive_root_count(t) for t in ("E6", "E7", "E8", "F4", "G2")] == [36, 63, 120, 24, 6]
    assert sphnorm.highest_root("E6") == [1, 2, 2, 3, 2, 1]


def test_hermitian_exponent():
    assert sphnorm.hermitian_exponent("E6", "a1") == 3
    assert sphnorm.hermitian_exponent("E7", "a7") == 2
    with pytest.raises(ValueError):
        sphnorm.hermitian_exponent("E7", "a1")


def test_triples():
    assert sphnorm.verify_triple("G2", "x_21", "h_21", "y_21")
    assert not sphnorm.verify_triple("G2", "x_21", "h_21", "2*y_21")
    assert sphnorm.centralizer_dim("G2", "x_21") == 6


def test_catalog(catalog):
    assert catalog.version == 1
    assert "12.2" in catalog.ids()
    assert len(catalog.covering_differences("A")) == 7
    assert len(catalog.low_triples("C")) == 5
    assert catalog.is_minuscule("12.2", "2D1 + D2 + D3") == (False, "s1", "D1 + D3")
    gens = catalog.generators("1.3")
    assert len(gens) == 4
    assert ([2], "D1", "s2 + 2s3") in gens


def test_reports(catalog):
    rep = catalog.run_case("12.2", sections=["normality"])
    assert rep["normal"] is False
    assert rep["sections"][0]["status"] == "PASS"
    summary = catalog.verify_all()
    assert summary["fail"] == 0
    assert summary["non_normal"] == ["12.2"]


def test_bad_catalog(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("pairs: []\n")
    with pytest.raises(sphnorm.CatalogError):
        sphnorm.load_catalog(str(bad))
