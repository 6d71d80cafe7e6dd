"""Sparse polynomials in ``t`` with integer and mod-2 coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping

INT64_MAX = 2**63 - 1


def _checked(v: int) -> int:
    if not -INT64_MAX - 1 <= v <= INT64_MAX:
        raise OverflowError(f"coefficient {v} does not fit in 64 bits")
    return v


class IntPolynomial:
    """Finitely supported map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coefficients or {}).items():
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if v:
                c[e] = _checked(int(v))
        self._c = c

    @classmethod
    def monomial(cls, coefficient: int, exponent: int = 0) -> "IntPolynomial":
        return cls({exponent: coefficient})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def support(self) -> list[int]:
        return sorted(self._c)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return IntPolynomial(c)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, k: int) -> "IntPolynomial":
        if not isinstance(k, int):
            return NotImplemented
        return IntPolynomial({e: k * v for e, v in self._c.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        return IntPolynomial({e + k: v for e, v in self._c.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def mod2(self) -> "Mod2Polynomial":
        return Mod2Polynomial(e for e, v in self._c.items() if v % 2)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        return isinstance(other, IntPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "IntPolynomial":
        return cls({int(e): v for e, v in obj.items()})

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_json()})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = ""
        for e in sorted(self._c):
            v = self._c[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(v)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out = ("-" if v < 0 else "") + body
            else:
                out += (" - " if v < 0 else " + ") + body
        return out


def int_sum(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    total = IntPolynomial()
    for p in polys:
        total = total + p
    return total


class Mod2Polynomial:
    """Polynomial over GF(2), stored as its set of exponents."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int] = ()):
        ex = frozenset(int(e) for e in exponents)
        if any(e < 0 for e in ex):
            raise ValueError("negative exponent")
        self.exponents = ex

    def __add__(self, other: "Mod2Polynomial") -> "Mod2Polynomial":
        return Mod2Polynomial(self.exponents ^ other.exponents)

    __sub__ = __add__

    def shift(self, k: int) -> "Mod2Polynomial":
        return Mod2Polynomial(e + k for e in self.exponents)

    def support(self) -> list[int]:
        return sorted(self.exponents)

    def is_zero(self) -> bool:
        return not self.exponents

    def __bool__(self) -> bool:
        return bool(self.exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mod2Polynomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def to_json(self) -> list[int]:
        return sorted(self.exponents)

    @classmethod
    def from_json(cls, obj: Iterable[int]) -> "Mod2Polynomial":
        return cls(obj)

    def __repr__(self) -> str:
        return f"Mod2Polynomial({self.to_json()})"

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        terms = ["1" if e == 0 else "t" if e == 1 else f"t^{e}" for e in sorted(self.exponents)]
        return " + ".join(terms)
