"""Signed Gauss codes: parsing, rendering, chords and interlacement.

A signed Gauss code lists, in order along the oriented knot, every
classical crossing twice (once as the over strand, once as the under
strand) together with the crossing sign. Virtual crossings are never
recorded. A Gauss code therefore determines a virtual knot only up to
virtual and detour moves, which means invariance under the virtual
Reidemeister moves holds by construction for anything computed here.

Text grammar::

    code  := token*
    token := ("O" | "U") label ("+" | "-")
    label := [A-Za-z0-9]+

Single spaces or commas between tokens are accepted on input. The
canonical rendering concatenates tokens with no separators.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

MAX_CROSSINGS = 10_000


class GaussCodeError(ValueError):
    """Base class for everything :func:`parse_gauss_code` can raise."""


class GaussCodeSyntaxError(GaussCodeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GaussCodeValidationError(GaussCodeError):
    """The text tokenizes but does not describe a knot.

    ``kind`` is one of ``"label_count"``, ``"roles"``, ``"sign_mismatch"``,
    ``"too_large"``.
    """

    def __init__(self, message: str, kind: str, label: str | None = None):
        super().__init__(message)
        self.kind = kind
        self.label = label


class UnknownLabelError(KeyError):
    def __init__(self, label: str):
        super().__init__(label)
        self.label = label

    def __str__(self) -> str:
        return f"unknown crossing label {self.label!r}"


class Role(enum.Enum):
    OVER = "O"
    UNDER = "U"

    def flipped(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1


@dataclass(frozen=True)
class Passage:
    label: str
    role: Role
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise GaussCodeValidationError(f"sign must be +1 or -1, got {self.sign!r}", "sign")
        if not self.label or not self.label.isascii() or not self.label.isalnum():
            raise GaussCodeValidationError(f"bad label {self.label!r}", "label", self.label)

    @property
    def token(self) -> str:
        return f"{self.role.value}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Chord:
    label: str
    endpoints: tuple[int, int]
    sign: int


@dataclass(frozen=True)
class GaussCode:
    """A validated, immutable signed Gauss code.

    Equality is strict and positional; use :meth:`cyclic_equal` to compare
    up to rotation of the passage sequence.
    """

    passages: tuple[Passage, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(self.passages))
        _validate(self.passages)

    def __len__(self) -> int:
        return len(self.passages)

    def __str__(self) -> str:
        return render_gauss_code(self)

    @classmethod
    def from_string(cls, text: str) -> "GaussCode":
        return parse_gauss_code(text)

    @cached_property
    def positions(self) -> dict[str, tuple[int, int]]:
        """Label -> the two slot indices of its passages, ascending."""
        seen: dict[str, list[int]] = {}
        for i, p in enumerate(self.passages):
            seen.setdefault(p.label, []).append(i)
        return {lab: (ix[0], ix[1]) for lab, ix in seen.items()}

    @property
    def labels(self) -> list[str]:
        """Labels in order of first appearance."""
        return list(self.positions)

    @property
    def crossing_count(self) -> int:
        return len(self.passages) // 2

    def sign(self, label: str) -> int:
        return self.passages[self._pos(label)[0]].sign

    def _pos(self, label: str) -> tuple[int, int]:
        try:
            return self.positions[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def rotated(self, k: int) -> "GaussCode":
        if not self.passages:
            return self
        k %= len(self.passages)
        return GaussCode(self.passages[k:] + self.passages[:k])

    def cyclic_equal(self, other: "GaussCode") -> bool:
        if len(self) != len(other):
            return False
        if not self.passages:
            return True
        return any(self.rotated(k).passages == other.passages for k in range(len(self)))

    def normalized(self) -> "GaussCode":
        """The rotation whose rendering is lexicographically smallest.

        Offered as a utility only; nothing in the package normalizes implicitly.
        """
        if not self.passages:
            return self
        return min((self.rotated(k) for k in range(len(self))), key=render_gauss_code)


def _validate(passages: tuple[Passage, ...]) -> None:
    if len(passages) > 2 * MAX_CROSSINGS:
        raise GaussCodeValidationError(
            f"more than {MAX_CROSSINGS} crossings", "too_large")
    groups: dict[str, list[Passage]] = {}
    for p in passages:
        if not isinstance(p, Passage):
            raise TypeError(f"expected Passage, got {type(p).__name__}")
        groups.setdefault(p.label, []).append(p)
    for label, ps in groups.items():
        if len(ps) != 2:
            raise GaussCodeValidationError(
                f"label {label!r} occurs {len(ps)} times, expected 2", "label_count", label)
        if ps[0].role is ps[1].role:
            raise GaussCodeValidationError(
                f"label {label!r} has two {ps[0].role.name} passages", "roles", label)
        if ps[0].sign != ps[1].sign:
            raise GaussCodeValidationError(
                f"sign mismatch on label {label!r}", "sign_mismatch", label)


def parse_gauss_code(text: str) -> GaussCode:
    passages = []
    i, n = 0, len(text)
    expect_token = True
    while i < n:
        ch = text[i]
        if ch in " ,":
            # at most one separator between tokens, none leading
            if expect_token:
                raise GaussCodeSyntaxError(f"unexpected separator {ch!r}", i)
            expect_token = True
            i += 1
            continue
        if ch not in "OU":
            raise GaussCodeSyntaxError(f"expected 'O' or 'U', got {ch!r}", i)
        j = i + 1
        while j < n and text[j].isascii() and text[j].isalnum():
            j += 1
        if j == i + 1:
            raise GaussCodeSyntaxError("empty label", j)
        if j >= n or text[j] not in "+-":
            raise GaussCodeSyntaxError("expected '+' or '-'", j)
        passages.append(Passage(text[i + 1:j], Role(ch), 1 if text[j] == "+" else -1))
        i = j + 1
        expect_token = False
    if passages and expect_token:
        raise GaussCodeSyntaxError("trailing separator", n - 1)
    return GaussCode(tuple(passages))


def render_gauss_code(code: GaussCode) -> str:
    return "".join(p.token for p in code.passages)


def chords(code: GaussCode) -> list[Chord]:
    return [Chord(lab, pos, code.passages[pos[0]].sign) for lab, pos in code.positions.items()]


def _alternate(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def interlaced(code: GaussCode, c: str, d: str) -> bool:
    if c == d:
        raise ValueError("a chord is not interlaced with itself")
    return _alternate(code._pos(c), code._pos(d))


@dataclass(frozen=True)
class InterlacementGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: str) -> set[str]:
        return {w for e in self.edges if v in e for w in e if w != v}


def interlacement_graph(code: GaussCode) -> InterlacementGraph:
    items = list(code.positions.items())
    edges = set()
    for i, (c, pc) in enumerate(items):
        for d, pd in items[i + 1:]:
            if _alternate(pc, pd):
                edges.add(frozenset((c, d)))
    return InterlacementGraph(tuple(code.positions), frozenset(edges))


def interlacement_degrees(code: GaussCode) -> dict[str, int]:
    """Number of chords interlaced with each chord, O(n^2)."""
    items = list(code.positions.values())
    deg = [0] * len(items)
    for i, (a0, a1) in enumerate(items):
        for j in range(i + 1, len(items)):
            b0, b1 = items[j]
            if a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1:
                deg[i] += 1
                deg[j] += 1
    return dict(zip(code.positions, deg))


def chord_parity(code: GaussCode, c: str) -> Parity:
    pc = code._pos(c)
    odd = sum(1 for d, pd in code.positions.items() if d != c and _alternate(pc, pd)) % 2
    return Parity(odd)


def parities(code: GaussCode) -> dict[str, Parity]:
    return {lab: Parity(d % 2) for lab, d in interlacement_degrees(code).items()}


def from_tokens(tokens: Iterable[str]) -> GaussCode:
    return parse_gauss_code("".join(tokens))
