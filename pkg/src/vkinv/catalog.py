"""Bundled catalog of named diagrams with expected invariant values.

One entry per line: ``name<TAB>code<TAB>expected-json<TAB>note``. The last
two columns are optional; ``#`` lines and blank lines are skipped. The
``VK_CATALOG`` environment variable points at a replacement file.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .codec import parse_gauss_code
from .report import InvariantReport, build_report


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: str
    expected: dict = field(default_factory=dict)
    note: str = ""

    @property
    def figure_pending(self) -> bool:
        return "figure-pending" in self.note


def default_catalog_text() -> str:
    env = os.environ.get("VK_CATALOG")
    if env:
        return Path(env).read_text()
    return resources.files("vkinv").joinpath("data/catalog.tsv").read_text()


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries = []
    names = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 2:
            raise CatalogError(f"line {lineno}: need at least name and code")
        name, code = cols[0].strip(), cols[1].strip()
        if name in names:
            raise CatalogError(f"line {lineno}: duplicate name {name!r}")
        names.add(name)
        try:
            expected = json.loads(cols[2]) if len(cols) > 2 and cols[2].strip() else {}
        except json.JSONDecodeError as e:
            raise CatalogError(f"line {lineno}: bad expected JSON: {e}") from None
        note = cols[3].strip() if len(cols) > 3 else ""
        entries.append(CatalogEntry(name, code, expected, note))
    return entries


def load_catalog() -> list[CatalogEntry]:
    return parse_catalog(default_catalog_text())


def find(entries: list[CatalogEntry], name: str) -> CatalogEntry:
    for e in entries:
        if e.name == name:
            return e
    raise CatalogError(f"no catalog entry named {name!r}")


def verify_entry(entry: CatalogEntry) -> tuple[InvariantReport, list[str]]:
    """Report for ``entry`` and the list of expected fields it fails."""
    report = build_report(parse_gauss_code(entry.code), oracle=True)
    got = report.to_json()
    bad = [k for k, v in entry.expected.items() if got.get(k) != v]
    return report, bad
