"""Aggregate invariant report, with JSON round-tripping."""
from __future__ import annotations

import json
from dataclasses import dataclass

from . import invariants as inv
from .codec import GaussCode, parse_gauss_code, render_gauss_code
from .polynomial import IntPolynomial, Mod2Polynomial


class OracleMismatch(AssertionError):
    def __init__(self, code: GaussCode, what: str, fast, oracle):
        super().__init__(f"{what} mismatch on {render_gauss_code(code)!r}: fast={fast} oracle={oracle}")
        self.code = code
        self.what = what


@dataclass(frozen=True)
class InvariantReport:
    code: str
    writhe: int
    gamma: IntPolynomial
    gamma_bar: Mod2Polynomial
    gamma2_bar: Mod2Polynomial
    parities: dict[str, str]
    pair_count: int

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "writhe": self.writhe,
            "gamma": self.gamma.to_json(),
            "gamma_bar": self.gamma_bar.to_json(),
            "gamma2_bar": self.gamma2_bar.to_json(),
            "parities": dict(self.parities),
            "pair_count": self.pair_count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InvariantReport":
        return cls(
            code=obj["code"],
            writhe=int(obj["writhe"]),
            gamma=IntPolynomial.from_json(obj["gamma"]),
            gamma_bar=Mod2Polynomial.from_json(obj["gamma_bar"]),
            gamma2_bar=Mod2Polynomial.from_json(obj["gamma2_bar"]),
            parities=dict(obj["parities"]),
            pair_count=int(obj["pair_count"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def text(self) -> str:
        par = " ".join(f"{lab}:{p}" for lab, p in self.parities.items()) or "-"
        return "\n".join([
            f"code       {self.code or '(empty)'}",
            f"writhe     {self.writhe}",
            f"gamma      {self.gamma}",
            f"gamma_bar  {self.gamma_bar}",
            f"gamma2_bar {self.gamma2_bar}",
            f"parities   {par}",
            f"|P|        {self.pair_count}",
        ])


def build_report(code: GaussCode | str, oracle: bool = False) -> InvariantReport:
    """Compute every invariant of ``code``; with ``oracle`` cross-check both slow paths.

    Raises :class:`OracleMismatch` if a fast value disagrees with its oracle.
    """
    if isinstance(code, str):
        code = parse_gauss_code(code)
    g = inv.gamma(code)
    g2 = inv.gamma2_bar(code)
    if oracle:
        go = inv.gamma_oracle(code)
        if go != g:
            raise OracleMismatch(code, "gamma", g, go)
        g2o = inv.gamma2_oracle(code)
        if g2o != g2:
            raise OracleMismatch(code, "gamma2_bar", g2, g2o)
    return InvariantReport(
        code=render_gauss_code(code),
        writhe=inv.writhe(code),
        gamma=g,
        gamma_bar=g.mod2(),
        gamma2_bar=g2,
        parities={lab: p.name.lower() for lab, p in inv.parity_map(code).items()},
        pair_count=len(inv.opposite_parity_pairs(code)),
    )
