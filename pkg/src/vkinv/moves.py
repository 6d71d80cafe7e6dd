"""Reidemeister moves on Gauss codes, random diagrams and scrambling.

Virtual Reidemeister moves are not implemented because a Gauss code
cannot see them. Of the third move only the braid-like variant is
implemented: strands ``a``, ``b``, ``c`` meet at crossings ``x``
(a over b), ``y`` (a over c) and ``z`` (b over c), so the six passages
form the adjacent pairs ``(O_x O_y)``, ``(U_x O_z)``, ``(U_y U_z)`` with a
common sign. The move reverses each pair. The other sign and orientation
variants follow from this one together with the second move.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .codec import GaussCode, Passage, Role

R1_INSERT = "R1insert"
R1_DELETE = "R1delete"
R2_INSERT = "R2insert"
R2_DELETE = "R2delete"
R3 = "R3"

OVER_FIRST = "OverFirst"
UNDER_FIRST = "UnderFirst"
INTERLEAVED = "Interleaved"
NESTED = "Nested"


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    """A located move. Only the fields relevant to ``kind`` are set."""

    kind: str
    gaps: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()
    positions: tuple[int, ...] = ()
    sign: int = 1
    variant: str | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.gaps:
            out["gaps"] = list(self.gaps)
        if self.labels:
            out["labels"] = list(self.labels)
        if self.positions:
            out["positions"] = list(self.positions)
        if self.kind in (R1_INSERT, R2_INSERT):
            out["sign"] = self.sign
            out["variant"] = self.variant
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "MoveSite":
        kind = obj["kind"]
        if kind not in (R1_INSERT, R1_DELETE, R2_INSERT, R2_DELETE, R3):
            raise MoveError(f"unknown move kind {kind!r}")
        return cls(
            kind=kind,
            gaps=tuple(obj.get("gaps", ())),
            labels=tuple(str(x) for x in obj.get("labels", ())),
            positions=tuple(obj.get("positions", ())),
            sign=int(obj.get("sign", 1)),
            variant=obj.get("variant"),
        )


def fresh_label(code: GaussCode, taken: Iterable[str] = ()) -> str:
    used = set(code.positions) | set(taken)
    k = 1
    while str(k) in used:
        k += 1
    return str(k)


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise MoveError(f"sign must be +1 or -1, got {sign!r}")


def _check_gap(code: GaussCode, gap: int) -> None:
    if not 0 <= gap <= len(code):
        raise MoveError(f"gap {gap} out of range 0..{len(code)}")


def _insert(code: GaussCode, pieces: Sequence[tuple[int, Sequence[Passage]]]) -> GaussCode:
    """Insert each run of passages before original slot ``gap`` (stable in list order)."""
    by_gap: dict[int, list[Passage]] = {}
    for gap, run in pieces:
        by_gap.setdefault(gap, []).extend(run)
    out: list[Passage] = []
    for i in range(len(code) + 1):
        out.extend(by_gap.get(i, ()))
        if i < len(code):
            out.append(code.passages[i])
    return GaussCode(tuple(out))


def r1_insert(code: GaussCode, gap: int, sign: int, order: str = OVER_FIRST) -> GaussCode:
    _check_gap(code, gap)
    _check_sign(sign)
    if order not in (OVER_FIRST, UNDER_FIRST):
        raise MoveError(f"unknown order {order!r}")
    a = fresh_label(code)
    o, u = Passage(a, Role.OVER, sign), Passage(a, Role.UNDER, sign)
    return _insert(code, [(gap, (o, u) if order == OVER_FIRST else (u, o))])


def _cyclic_adjacent(i: int, j: int, length: int) -> bool:
    return (i + 1) % length == j


def r1_delete(code: GaussCode, label: str) -> GaussCode:
    p, q = code._pos(label)
    L = len(code)
    if not (_cyclic_adjacent(p, q, L) or _cyclic_adjacent(q, p, L)):
        raise MoveError(f"passages of {label!r} are not adjacent")
    return GaussCode(tuple(x for x in code.passages if x.label != label))


def r1_sites(code: GaussCode) -> list[str]:
    L = len(code)
    return [lab for lab, (p, q) in code.positions.items()
            if _cyclic_adjacent(p, q, L) or _cyclic_adjacent(q, p, L)]


def r2_insert(code: GaussCode, gap1: int, gap2: int, variant: str = INTERLEAVED,
              sign: int = 1) -> GaussCode:
    """Add two crossings of opposite sign; over pair at ``gap1``, under pair at ``gap2``.

    Gaps index the original code. With equal gaps the over pair comes first.
    """
    _check_gap(code, gap1)
    _check_gap(code, gap2)
    _check_sign(sign)
    a = fresh_label(code)
    b = fresh_label(code, (a,))
    over = (Passage(a, Role.OVER, sign), Passage(b, Role.OVER, -sign))
    ua, ub = Passage(a, Role.UNDER, sign), Passage(b, Role.UNDER, -sign)
    if variant == INTERLEAVED:
        under = (ua, ub)
    elif variant == NESTED:
        under = (ub, ua)
    else:
        raise MoveError(f"unknown R2 variant {variant!r}")
    return _insert(code, [(gap1, over), (gap2, under)])


def _r2_variant(code: GaussCode, a: str, b: str) -> str | None:
    """Variant name if {a, b} can be removed by an R2 move, else None."""
    if a == b or code.sign(a) != -code.sign(b):
        return None
    L = len(code)
    ps = code.passages

    def slot(lab, role):
        i, j = code.positions[lab]
        return i if ps[i].role is role else j

    oa, ob, ua, ub = slot(a, Role.OVER), slot(b, Role.OVER), slot(a, Role.UNDER), slot(b, Role.UNDER)
    for first, second, uf, us in ((oa, ob, ua, ub), (ob, oa, ub, ua)):
        if not _cyclic_adjacent(first, second, L):
            continue
        if _cyclic_adjacent(uf, us, L):
            return INTERLEAVED
        if _cyclic_adjacent(us, uf, L):
            return NESTED
    return None


def r2_delete(code: GaussCode, labels: Iterable[str]) -> GaussCode:
    labs = tuple(labels)
    if len(labs) != 2:
        raise MoveError("R2 deletion needs exactly two labels")
    for lab in labs:
        code._pos(lab)
    if _r2_variant(code, *labs) is None:
        raise MoveError(f"no R2 pattern on {labs}")
    return GaussCode(tuple(p for p in code.passages if p.label not in labs))


def r2_sites(code: GaussCode) -> list[tuple[str, str]]:
    """Removable R2 pairs. Candidates come from adjacent over-over slots."""
    L = len(code)
    ps = code.passages
    out = []
    for i in range(L):
        p, q = ps[i], ps[(i + 1) % L]
        if p.role is Role.OVER and q.role is Role.OVER and p.label != q.label:
            if _r2_variant(code, p.label, q.label):
                out.append((p.label, q.label))
    return out


def _r3_match(code: GaussCode, i: int) -> list[MoveSite]:
    """R3 sites whose over-over pair starts at slot ``i``.

    Both sides of the move are recognised: the forward arrangement
    ``(O_x O_y) (U_x O_z) (U_y U_z)`` and its pairwise reversal.
    """
    L = len(code)
    ps = code.passages
    if L < 6:
        return []
    i1 = (i + 1) % L
    if ps[i].role is not Role.OVER or ps[i1].role is not Role.OVER or ps[i].label == ps[i1].label:
        return []
    pos = code.positions

    def other(lab, slot):
        a, b = pos[lab]
        return b if a == slot else a

    s = ps[i].sign
    if ps[i1].sign != s:
        return []
    found = []
    for forward in (True, False):
        x, y = (ps[i].label, ps[i1].label) if forward else (ps[i1].label, ps[i].label)
        ux = other(x, i if forward else i1)
        uy = other(y, i1 if forward else i)
        step = 1 if forward else -1
        pz, qz = ps[(ux + step) % L], ps[(uy + step) % L]
        if pz.role is not Role.OVER or pz.label in (x, y) or pz.sign != s:
            continue
        if qz.label != pz.label or qz.role is not Role.UNDER:
            continue
        starts = (i, ux, uy) if forward else (i, (ux - 1) % L, (uy - 1) % L)
        found.append(MoveSite(R3, labels=(x, y, pz.label), positions=starts))
    return found


def r3_sites(code: GaussCode) -> list[MoveSite]:
    out = []
    for i in range(len(code)):
        out.extend(_r3_match(code, i))
    return out


def r3_apply(code: GaussCode, site: MoveSite) -> GaussCode:
    """Reverse the three adjacent pairs of ``site``; applying it again undoes it."""
    if site.kind != R3 or len(site.positions) != 3:
        raise MoveError("not an R3 site")
    L = len(code)
    if L < 6 or not all(0 <= p < L for p in site.positions):
        raise MoveError("stale R3 site")
    if site not in _r3_match(code, site.positions[0]):
        raise MoveError("stale R3 site")
    out = list(code.passages)
    for p in site.positions:
        q = (p + 1) % L
        out[p], out[q] = out[q], out[p]
    return GaussCode(tuple(out))


def apply_site(code: GaussCode, site: MoveSite) -> GaussCode:
    if site.kind == R1_INSERT:
        return r1_insert(code, site.gaps[0], site.sign, site.variant or OVER_FIRST)
    if site.kind == R1_DELETE:
        return r1_delete(code, site.labels[0])
    if site.kind == R2_INSERT:
        return r2_insert(code, site.gaps[0], site.gaps[1], site.variant or INTERLEAVED, site.sign)
    if site.kind == R2_DELETE:
        return r2_delete(code, site.labels)
    if site.kind == R3:
        return r3_apply(code, site)
    raise MoveError(f"unknown move kind {site.kind!r}")


def apply_script(code: GaussCode, sites: Iterable[MoveSite]) -> GaussCode:
    for site in sites:
        code = apply_site(code, site)
    return code


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_slots(n: int, rng: random.Random) -> tuple[list[int], list[int], list[bool]]:
    """Chord id per slot, sign per chord, and whether the first end is the over passage."""
    slots = list(range(2 * n))
    rng.shuffle(slots)
    chord_of = [0] * (2 * n)
    for k in range(n):
        chord_of[slots[2 * k]] = k
        chord_of[slots[2 * k + 1]] = k
    signs = [rng.choice((1, -1)) for _ in range(n)]
    over_first = [rng.random() < 0.5 for _ in range(n)]
    return chord_of, signs, over_first


def slots_to_code(chord_of: list[int], signs: list[int], over_first: list[bool]) -> GaussCode:
    names: dict[int, str] = {}
    seen: set[int] = set()
    out = []
    for k in chord_of:
        names.setdefault(k, str(len(names) + 1))
        first = k not in seen
        seen.add(k)
        role = Role.OVER if first == over_first[k] else Role.UNDER
        out.append(Passage(names[k], role, signs[k]))
    return GaussCode(tuple(out))


def random_code(n: int, seed) -> GaussCode:
    """Uniform random chord diagram on ``2n`` slots with fair signs and roles.

    ``seed`` is an int or a :class:`random.Random`, which is advanced.
    Labels are ``1..n`` in order of first appearance.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return slots_to_code(*random_slots(n, _rng(seed)))


@dataclass
class ScrambleLog:
    start: GaussCode
    code: GaussCode
    sites: list[MoveSite] = field(default_factory=list)

    def count(self, kind: str) -> int:
        return sum(1 for s in self.sites if s.kind == kind)


def scramble_trace(code: GaussCode, seed, steps: int, allowed: Iterable[str] = ("r2", "r3")) -> ScrambleLog:
    """Apply ``steps`` random moves and record them as replayable sites.

    ``allowed`` is drawn from ``{"r1", "r2", "r3"}``. Each step picks
    uniformly among the move types that currently have a site, then a
    site uniformly within that type. A step with nothing applicable
    (only ``r3`` allowed, no site) is skipped and logged as nothing.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    allowed = {a.lower() for a in allowed}
    bad = allowed - {"r1", "r2", "r3"}
    if bad:
        raise ValueError(f"unknown move types {sorted(bad)}")
    rng = _rng(seed)
    log = ScrambleLog(code, code)
    for _ in range(steps):
        options = []
        if "r1" in allowed:
            options.append(R1_INSERT)
            if r1_sites(code):
                options.append(R1_DELETE)
        if "r2" in allowed:
            options.append(R2_INSERT)
            if r2_sites(code):
                options.append(R2_DELETE)
        r3 = r3_sites(code) if "r3" in allowed else []
        if r3:
            options.append(R3)
        if not options:
            continue
        kind = rng.choice(options)
        L = len(code)
        if kind == R1_INSERT:
            site = MoveSite(R1_INSERT, gaps=(rng.randint(0, L),), sign=rng.choice((1, -1)),
                            variant=rng.choice((OVER_FIRST, UNDER_FIRST)))
        elif kind == R1_DELETE:
            site = MoveSite(R1_DELETE, labels=(rng.choice(r1_sites(code)),))
        elif kind == R2_INSERT:
            site = MoveSite(R2_INSERT, gaps=(rng.randint(0, L), rng.randint(0, L)),
                            sign=rng.choice((1, -1)), variant=rng.choice((INTERLEAVED, NESTED)))
        elif kind == R2_DELETE:
            site = MoveSite(R2_DELETE, labels=rng.choice(r2_sites(code)))
        else:
            site = rng.choice(r3)
        code = apply_site(code, site)
        log.sites.append(site)
    log.code = code
    return log


def scramble(code: GaussCode, seed, steps: int, allowed: Iterable[str] = ("r2", "r3")) -> GaussCode:
    return scramble_trace(code, seed, steps, allowed).code
