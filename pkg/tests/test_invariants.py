import random

import pytest
from hypothesis import given

from conftest import gauss_codes
from oracles import TREFOIL, VIRTUAL_TREFOIL, gamma_brute
from vkinv import invariants as inv
from vkinv.codec import chord_parity, parse_gauss_code
from vkinv.moves import random_code
from vkinv.polynomial import IntPolynomial, Mod2Polynomial
from vkinv.surgery import switch_crossing

K = parse_gauss_code


@pytest.mark.parametrize("text,w", [(TREFOIL, -3), (VIRTUAL_TREFOIL, -2), ("", 0)])
def test_writhe(text, w):
    assert inv.writhe(K(text)) == w


@pytest.mark.parametrize("text,expected", [
    (TREFOIL, {0: -3}),
    (VIRTUAL_TREFOIL, {1: -2}),
    ("", {}),
    ("O1+U1+", {0: 1}),
])
def test_gamma_examples(text, expected):
    assert inv.gamma(K(text)) == IntPolynomial(expected)
    assert inv.gamma_oracle(K(text)) == IntPolynomial(expected)


def test_gamma_bar_examples():
    assert inv.gamma_bar(K(TREFOIL)) == Mod2Polynomial([0])
    assert inv.gamma_bar(K(VIRTUAL_TREFOIL)).is_zero()
    assert inv.gamma_bar(K("")).is_zero()


def test_evaluate_at_one():
    assert inv.evaluate_at_one(inv.gamma(K(TREFOIL))) == -3
    assert inv.evaluate_at_one(inv.gamma(K(VIRTUAL_TREFOIL))) == -2
    assert inv.evaluate_at_one(IntPolynomial()) == 0


@pytest.mark.parametrize("text", [VIRTUAL_TREFOIL, "O1+U1+", TREFOIL])
def test_no_opposite_parity_pairs(text):
    assert inv.opposite_parity_pairs(K(text)) == []
    assert inv.varsigma(K(text)) == []
    assert inv.gamma2_bar(K(text)).is_zero()


def test_opposite_parity_pairs_nonempty():
    # interlacement is the path 1-2-3-4: ends odd, middle even
    k = K("O1+O2+U1+O3+U2+O4+U3+U4+")
    assert inv.opposite_parity_pairs(k) == [("1", "2"), ("3", "4")]
    kps = inv.varsigma(k)
    assert len(kps) == 2
    assert all(kp.crossing_count == 2 for kp in kps)


def test_gamma2_single_twist_is_zero():
    assert inv.gamma2_bar(K("O1+U1+")) == Mod2Polynomial()
    assert inv.gamma2_oracle(K("O1+U1+")) == Mod2Polynomial()


@given(gauss_codes(max_n=9))
def test_gamma_matches_brute_force(k):
    assert inv.gamma(k) == IntPolynomial(gamma_brute(k))
    assert inv.gamma(k) == inv.gamma_oracle(k)


@given(gauss_codes(max_n=9))
def test_gamma2_matches_oracle(k):
    g2 = inv.gamma2_bar(k)
    assert g2 == inv.gamma2_oracle(k)
    assert set(g2.support()) <= {2}


@given(gauss_codes(max_n=12))
def test_t_coefficient_even_and_writhe(k):
    g = inv.gamma(k)
    assert g.coefficient(1) % 2 == 0
    assert inv.evaluate_at_one(g) == inv.writhe(k)
    assert set(g.support()) <= {0, 1}


@given(gauss_codes(min_n=1, max_n=10))
def test_crossing_switch(k):
    for lab in k.positions:
        k2 = switch_crossing(k, lab)
        pos, neg = (k, k2) if k.sign(lab) > 0 else (k2, k)
        assert inv.gamma(pos) - inv.gamma(neg) == IntPolynomial.monomial(2, int(chord_parity(k, lab)))
        assert inv.gamma_bar(pos) == inv.gamma_bar(neg)
        assert (inv.gamma(pos) + inv.gamma(neg)).mod2().is_zero()
        assert inv.gamma2_bar(k) == inv.gamma2_bar(k2)


def test_classical_gamma_is_constant():
    for text in (TREFOIL, "O1+U2-O3-U1+O4+U3-O2-U4+"):
        g = inv.gamma(K(text))
        assert g.coefficient(1) == 0
        assert g == inv.gamma_oracle(K(text))
        assert g.evaluate_at_one() == inv.writhe(K(text))


def test_pair_count_always_even():
    rng = random.Random(3)
    for _ in range(2000):
        k = random_code(rng.randint(0, 12), rng)
        assert len(inv.opposite_parity_pairs(k)) % 2 == 0


def test_pair_smoothing_constant_terms_match_crossing_parity():
    # each t^2 gamma(K_p) term reduces to t^2 (n mod 2); with |P| even the sum vanishes mod 2
    rng = random.Random(4)
    for _ in range(1000):
        k = random_code(rng.randint(2, 11), rng)
        for kp in inv.varsigma(k):
            assert inv.gamma(kp).coefficient(0) % 2 == k.crossing_count % 2
            assert inv.gamma(kp).coefficient(1) % 2 == 0
