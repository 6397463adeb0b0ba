"""Spherical nilpotent orbit verifier: root systems, spherical systems and weight semigroups."""

from __future__ import annotations

from pathlib import Path

from ._sphnorm import (
    Catalog as _Catalog,
    CatalogError,
    centralizer_dim,
    default_catalog_path as _compiled_catalog_path,
    hermitian_exponent,
    highest_root,
    positive_root_count,
    verify_triple,
)

__all__ = [
    "Catalog",
    "CatalogError",
    "centralizer_dim",
    "default_catalog_path",
    "hermitian_exponent",
    "highest_root",
    "load_catalog",
    "positive_root_count",
    "verify_triple",
]

Catalog = _Catalog


def default_catalog_path() -> str:
    bundled = Path(__file__).with_name("data") / "catalog.yaml"
    return str(bundled) if bundled.exists() else _compiled_catalog_path()


def load_catalog(path: str | None = None) -> Catalog:
    return Catalog(path or default_catalog_path())
