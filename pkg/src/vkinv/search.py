"""Seeded random search for diagrams with prescribed invariant values.

Candidates are evaluated on bare slot arrays, never as :class:`GaussCode`
objects, so a million of them fit in a few minutes on one core. The
kernel reads chord parity from gap length: the slots strictly between the
two ends of a chord hold one end of every chord interlaced with it and
both ends of every chord nested inside it, so the interlacement degree and
``q - p - 1`` agree mod 2.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .codec import GaussCode
from .moves import random_slots, slots_to_code


@dataclass
class SearchConfig:
    max_candidates: int = 1_000_000
    min_n: int = 2
    max_n: int = 10
    seed: int = 20240611
    time_limit: float = 300.0
    # log codes whose gamma equals this (constant, t) pair
    watch_gamma: tuple[int, int] | None = (2, 4)
    stop_at_first: bool = True


@dataclass
class SearchResult:
    candidates: int = 0
    elapsed: float = 0.0
    hits: list[GaussCode] = field(default_factory=list)
    watched: list[GaussCode] = field(default_factory=list)
    t3_violations: list[GaussCode] = field(default_factory=list)
    # how many candidates had a nonempty set of opposite-parity pairs
    nonempty_pairs: int = 0
    pair_count_parity: dict[int, int] = field(default_factory=lambda: {0: 0, 1: 0})


def _ends(chord_of: list[int]) -> tuple[list[int], list[int]]:
    n = len(chord_of) // 2
    lo, hi = [-1] * n, [0] * n
    for s, c in enumerate(chord_of):
        if lo[c] < 0:
            lo[c] = s
        else:
            hi[c] = s
    return lo, hi


def gamma_kernel(chord_of: list[int], signs: list[int]) -> tuple[int, int]:
    """(constant, t) coefficients of gamma from a slot array."""
    lo, hi = _ends(chord_of)
    a = b = 0
    for c in range(len(lo)):
        if (hi[c] - lo[c] - 1) & 1:
            b += signs[c]
        else:
            a += signs[c]
    return a, b


def gamma2_kernel(chord_of: list[int], signs: list[int]) -> tuple[int, int, int]:
    """Integer t^2 and t^3 coefficients before reduction mod 2, and the pair count."""
    lo, hi = _ends(chord_of)
    n = len(lo)
    L = 2 * n
    odd = [(hi[c] - lo[c] - 1) & 1 for c in range(n)]
    c2 = c3 = npairs = 0
    for i in range(n):
        i0, i1, oi = lo[i], hi[i], odd[i]
        for j in range(i + 1, n):
            if odd[j] == oi:
                continue
            j0, j1 = lo[j], hi[j]
            if not (i0 < j0 < i1 < j1 or j0 < i0 < j1 < i1):
                continue
            npairs += 1
            partner = {i0: i1, i1: i0, j0: j1, j1: j0}
            word = []
            a = i0
            # single component: walk until back at the start arc
            while True:
                s = a + 1 if a + 1 < L else 0
                q = partner.get(s)
                if q is None:
                    word.append(chord_of[s])
                    a = s
                else:
                    a = q
                if a == i0:
                    break
            first: dict[int, int] = {}
            for pos, c in enumerate(word):
                f = first.get(c)
                if f is None:
                    first[c] = pos
                elif (pos - f - 1) & 1:
                    c3 += signs[c]
                else:
                    c2 += signs[c]
    return c2, c3, npairs


def run_search(cfg: SearchConfig, progress=None) -> SearchResult:
    rng = random.Random(cfg.seed)
    res = SearchResult()
    t0 = time.perf_counter()
    for k in range(cfg.max_candidates):
        if k % 4096 == 0 and time.perf_counter() - t0 > cfg.time_limit:
            break
        n = rng.randint(cfg.min_n, cfg.max_n)
        chord_of, signs, over_first = random_slots(n, rng)
        res.candidates += 1
        c2, c3, npairs = gamma2_kernel(chord_of, signs)
        if npairs:
            res.nonempty_pairs += 1
        res.pair_count_parity[npairs & 1] += 1
        if c3 & 1:
            res.t3_violations.append(slots_to_code(chord_of, signs, over_first))
        if cfg.watch_gamma is not None and (c2 & 1):
            if gamma_kernel(chord_of, signs) == cfg.watch_gamma:
                res.watched.append(slots_to_code(chord_of, signs, over_first))
        if c2 & 1 and not c3 & 1:
            res.hits.append(slots_to_code(chord_of, signs, over_first))
            if cfg.stop_at_first:
                break
        if progress is not None and k % 100_000 == 0:
            progress(k, res)
    res.elapsed = time.perf_counter() - t0
    return res
