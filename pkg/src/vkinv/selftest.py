"""Property scan over random diagrams, driven by ``vk selftest``.

Each property is a function ``(code, ctx) -> str | None`` returning a
failure description or ``None``. ``ctx.gamma`` is the gamma under test,
which the ``flip-sign`` fault replaces with a deliberately broken one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import invariants as inv
from .codec import GaussCode, Passage, chord_parity, interlaced, render_gauss_code
from .moves import r1_insert, random_code, scramble
from .polynomial import IntPolynomial
from .surgery import (component_count, linking_mod2, linking_number, smooth,
                      switch_crossing)

DEFAULT_SEED = 20240611
FAULTS = ("flip-sign",)


@dataclass
class SelftestConfig:
    min_n: int = 0
    max_n: int = 8
    count: int = 200
    seed: int = DEFAULT_SEED
    fault: str | None = None
    scramble_steps: int = 10


@dataclass
class Context:
    gamma: Callable[[GaussCode], IntPolynomial]
    rng: random.Random
    scramble_steps: int


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    example: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class SelftestSummary:
    config: SelftestConfig
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def violated(self) -> list[str]:
        return [r.name for r in self.results if not r.ok]

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            tag = "PASS" if r.ok else "FAIL"
            line = f"{tag} {r.name:<20} checked={r.checked} failures={r.failures}"
            if r.example:
                line += f" first: {r.example}"
            out.append(line)
        c = self.config
        out.append(f"{'OK' if self.ok else 'FAILED'}: n={c.min_n}..{c.max_n} count={c.count} seed={c.seed}")
        return out


def _faulty_gamma(code: GaussCode) -> IntPolynomial:
    if not code.passages:
        return inv.gamma(code)
    lab = code.passages[0].label
    flipped = tuple(Passage(p.label, p.role, -p.sign) if p.label == lab else p for p in code.passages)
    return inv.gamma(GaussCode(flipped))


def p_oracle_gamma(code, ctx):
    g, o = ctx.gamma(code), inv.gamma_oracle(code)
    return None if g == o else f"fast {g} vs oracle {o}"


def p_oracle_gamma2(code, ctx):
    g, o = inv.gamma2_bar(code), inv.gamma2_oracle(code)
    return None if g == o else f"fast {g} vs oracle {o}"


def p_even_t(code, ctx):
    b = ctx.gamma(code).coefficient(1)
    return None if b % 2 == 0 else f"t coefficient {b}"


def p_writhe(code, ctx):
    v, w = ctx.gamma(code).evaluate_at_one(), inv.writhe(code)
    return None if v == w else f"gamma(1)={v} writhe={w}"


def p_parity_bridge(code, ctx):
    for c in code.positions:
        if linking_mod2(smooth(code, {c})) != int(chord_parity(code, c)):
            return f"crossing {c}"
    return None


def p_component_law(code, ctx):
    labs = list(code.positions)
    for c in labs:
        if component_count(smooth(code, {c})) != 2:
            return f"single {c}"
    for i, c in enumerate(labs):
        for d in labs[i + 1:]:
            want = 1 if interlaced(code, c, d) else 3
            if component_count(smooth(code, {c, d})) != want:
                return f"pair {c},{d}"
    return None


def _switch_pairs(code, ctx):
    for lab in code.positions:
        k2 = switch_crossing(code, lab)
        # orient so that `pos` carries the positive crossing
        pos, neg = (code, k2) if code.sign(lab) > 0 else (k2, code)
        yield lab, pos, neg


def p_fintype(code, ctx):
    for lab, pos, neg in _switch_pairs(code, ctx):
        want = IntPolynomial.monomial(2, int(chord_parity(code, lab)))
        diff = ctx.gamma(pos) - ctx.gamma(neg)
        if diff != want:
            return f"switch {lab}: difference {diff}, expected {want}"
        if ctx.gamma(pos).mod2() != ctx.gamma(neg).mod2():
            return f"switch {lab}: gamma_bar changed"
    return None


def p_corollary(code, ctx):
    for lab, pos, neg in _switch_pairs(code, ctx):
        s = ctx.gamma(pos) + ctx.gamma(neg)
        if not s.mod2().is_zero():
            return f"switch {lab}: sum {s}"
    return None


def p_switch_linking(code, ctx):
    for lab in code.positions:
        k2 = switch_crossing(code, lab)
        for c in code.positions:
            if c == lab:
                continue
            d = linking_number(smooth(code, {c})) - linking_number(smooth(k2, {c}))
            if d not in (0, 2, -2):
                return f"switch {lab} smooth {c}: change {d}"
    return None


def p_gamma2_degree_one(code, ctx):
    g = inv.gamma2_bar(code)
    for lab in code.positions:
        if inv.gamma2_bar(switch_crossing(code, lab)) != g:
            return f"switch {lab}"
    return None


def p_t3_absent(code, ctx):
    g = inv.gamma2_bar(code)
    return None if 3 not in g.exponents else f"gamma2_bar {g}"


def p_r2r3_invariance(code, ctx):
    k2 = scramble(code, ctx.rng.getrandbits(32), ctx.scramble_steps, ("r2", "r3"))
    for name, f in (("gamma", ctx.gamma), ("gamma_bar", lambda k: ctx.gamma(k).mod2()),
                    ("gamma2_bar", inv.gamma2_bar)):
        if f(code) != f(k2):
            return f"{name} changed, scrambled to {render_gauss_code(k2) or '(empty)'}"
    return None


def p_r1_shift(code, ctx):
    eps = ctx.rng.choice((1, -1))
    k2 = r1_insert(code, ctx.rng.randint(0, len(code)), eps)
    diff = ctx.gamma(k2) - ctx.gamma(code)
    if diff != IntPolynomial.monomial(eps):
        return f"shift {diff}, expected {eps}"
    if inv.gamma2_bar(k2) != inv.gamma2_bar(code):
        return "gamma2_bar changed"
    return None


PROPERTIES: dict[str, Callable] = {
    "oracle_gamma": p_oracle_gamma,
    "oracle_gamma2": p_oracle_gamma2,
    "even_t_coefficient": p_even_t,
    "writhe_at_one": p_writhe,
    "parity_bridge": p_parity_bridge,
    "component_law": p_component_law,
    "fintype_switch": p_fintype,
    "switch_sum_even": p_corollary,
    "switch_linking": p_switch_linking,
    "gamma2_degree_one": p_gamma2_degree_one,
    "gamma2_no_t3": p_t3_absent,
    "r2r3_invariance": p_r2r3_invariance,
    "r1_shift": p_r1_shift,
}


def run_selftest(cfg: SelftestConfig) -> SelftestSummary:
    if cfg.fault is not None and cfg.fault not in FAULTS:
        raise ValueError(f"unknown fault {cfg.fault!r}; choose from {FAULTS}")
    rng = random.Random(cfg.seed)
    ctx = Context(_faulty_gamma if cfg.fault == "flip-sign" else inv.gamma,
                  random.Random(rng.getrandbits(64)), cfg.scramble_steps)
    results = {name: PropertyResult(name) for name in PROPERTIES}
    for _ in range(cfg.count):
        code = random_code(rng.randint(cfg.min_n, cfg.max_n), rng)
        for name, prop in PROPERTIES.items():
            r = results[name]
            r.checked += 1
            msg = prop(code, ctx)
            if msg is not None:
                r.failures += 1
                if r.example is None:
                    r.example = f"{render_gauss_code(code) or '(empty)'}: {msg}"
    return SelftestSummary(cfg, list(results.values()))
