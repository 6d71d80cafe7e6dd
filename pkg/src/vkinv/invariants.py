"""Writhe, the smoothing-parity polynomial gamma and its relatives.

For each crossing ``c`` the smoothed two-component link ``K_c`` has a
linking number whose parity equals the number of chords interlaced with
``c``, mod 2 (the two components carry the slots on either side of the
chord, so the crossings shared between them are exactly the chords that
cross it). The fast path uses that identity and never traces a link. The
``*_oracle`` functions smooth and count literally and share nothing with
the fast path except the surgery primitive.

Notes on ``gamma2_bar``: the result is returned as a polynomial so the
absence of a ``t^3`` term is observable rather than assumed. Counting
parities shows every term ``t^2 * gamma(K_p)`` reduces to
``t^2 * (n mod 2)`` and the number of opposite-parity interlaced pairs is
even, so under this definition ``gamma2_bar`` vanishes on every diagram.
"""
from __future__ import annotations

from .codec import GaussCode, Parity, interlacement_degrees, parities
from .polynomial import IntPolynomial, Mod2Polynomial
from .surgery import knot_from_pair_smoothing, linking_mod2, smooth


def writhe(code: GaussCode) -> int:
    return sum(code.sign(lab) for lab in code.positions)


def _gamma_coeffs(code: GaussCode) -> tuple[int, int]:
    even = odd = 0
    ps = code.passages
    for lab, d in interlacement_degrees(code).items():
        s = ps[code.positions[lab][0]].sign
        if d & 1:
            odd += s
        else:
            even += s
    return even, odd


def gamma(code: GaussCode) -> IntPolynomial:
    even, odd = _gamma_coeffs(code)
    return IntPolynomial({0: even, 1: odd})


def gamma_oracle(code: GaussCode) -> IntPolynomial:
    coeffs = {0: 0, 1: 0}
    for lab in code.positions:
        coeffs[linking_mod2(smooth(code, {lab}))] += code.sign(lab)
    return IntPolynomial(coeffs)


def gamma_bar(code: GaussCode) -> Mod2Polynomial:
    return gamma(code).mod2()


def evaluate_at_one(p: IntPolynomial) -> int:
    return p.evaluate_at_one()


def opposite_parity_pairs(code: GaussCode) -> list[tuple[str, str]]:
    """Interlaced pairs of chords whose parities differ, sorted by label."""
    par = parities(code)
    pos = code.positions
    labs = sorted(pos)
    out = []
    for i, c in enumerate(labs):
        c0, c1 = pos[c]
        for d in labs[i + 1:]:
            if par[c] == par[d]:
                continue
            d0, d1 = pos[d]
            if c0 < d0 < c1 < d1 or d0 < c0 < d1 < c1:
                out.append((c, d))
    return out


def varsigma(code: GaussCode) -> list[GaussCode]:
    """The formal sum of pair-smoothed knots, as a list (multiplicity kept)."""
    return [knot_from_pair_smoothing(code, p) for p in opposite_parity_pairs(code)]


def gamma2_bar(code: GaussCode) -> Mod2Polynomial:
    total = IntPolynomial()
    for kp in varsigma(code):
        total = total + gamma(kp).shift(2)
    return total.mod2()


def gamma2_oracle(code: GaussCode) -> Mod2Polynomial:
    """gamma2_bar with parities read off traced linking numbers.

    A pair is taken as interlaced when smoothing both crossings leaves a
    single component; the knot that component carries is ``K_p``.
    """
    labs = sorted(code.positions)
    par = {lab: linking_mod2(smooth(code, {lab})) for lab in labs}
    total = Mod2Polynomial()
    for i, c in enumerate(labs):
        for d in labs[i + 1:]:
            if par[c] == par[d]:
                continue
            r = smooth(code, {c, d})
            if len(r.link.components) != 1:
                continue
            kp = GaussCode(r.link.components[0])
            total = total + gamma_oracle(kp).mod2().shift(2)
    return total


def parity_map(code: GaussCode) -> dict[str, Parity]:
    return parities(code)
