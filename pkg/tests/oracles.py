"""Brute-force reference computations, independent of the package internals."""
from __future__ import annotations

import itertools

from vkinv.codec import GaussCode
from vkinv.moves import slots_to_code

TREFOIL = "O1-U2-O3-U1-O2-U3-"
VIRTUAL_TREFOIL = "O1-O2-U1-U2-"


def layouts(n):
    """Every perfect matching of 2n slots, as a chord id per slot."""
    def rec(free):
        if not free:
            yield []
            return
        a = free[0]
        for i in range(1, len(free)):
            rest = free[1:i] + free[i + 1:]
            for m in rec(rest):
                yield [(a, free[i])] + m
    for m in rec(list(range(2 * n))):
        chord_of = [0] * (2 * n)
        for k, (a, b) in enumerate(m):
            chord_of[a] = chord_of[b] = k
        yield chord_of


def all_codes(max_n, signs=True, roles=True):
    for n in range(max_n + 1):
        sign_opts = itertools.product((1, -1), repeat=n) if signs else [(1,) * n]
        sign_opts = list(sign_opts)
        role_opts = list(itertools.product((True, False), repeat=n)) if roles else [(True,) * n]
        for chord_of in layouts(n):
            for sg in sign_opts:
                for of in role_opts:
                    yield slots_to_code(chord_of, list(sg), list(of))


def interlaced_by_word(code: GaussCode, c: str, d: str) -> bool:
    """c and d alternate iff the word restricted to them is cdcd up to rotation."""
    w = "".join("c" if p.label == c else "d" for p in code.passages if p.label in (c, d))
    return w in ("cdcd", "dcdc")


def degree(code: GaussCode, c: str) -> int:
    return sum(interlaced_by_word(code, c, d) for d in code.positions if d != c)


def components_union_find(code: GaussCode, smoothed) -> int:
    """Count components after smoothing by joining arcs with a union-find."""
    L = len(code)
    if L == 0:
        return 1
    parent = list(range(L))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    smoothed_slots = {}
    for lab in smoothed:
        p, q = code.positions[lab]
        smoothed_slots[p], smoothed_slots[q] = q, p
    for s in range(L):
        entering = (s - 1) % L
        if s in smoothed_slots:
            join(entering, smoothed_slots[s])
        else:
            join(entering, s)
    return len({find(x) for x in range(L)})


def linking_by_halves(code: GaussCode, c: str) -> int:
    """Linking number after smoothing c: crossings with exactly one end strictly inside c."""
    p, q = code.positions[c]
    total = 0
    for d, (a, b) in code.positions.items():
        if d != c and ((p < a < q) != (p < b < q)):
            total += code.sign(d)
    return total


def gamma_brute(code: GaussCode) -> dict[int, int]:
    out = {0: 0, 1: 0}
    for c in code.positions:
        out[degree(code, c) % 2] += code.sign(c)
    return {e: v for e, v in out.items() if v}
