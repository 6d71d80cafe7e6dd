import pytest
from hypothesis import given, strategies as st

from conftest import gauss_codes
from oracles import TREFOIL, VIRTUAL_TREFOIL, degree, interlaced_by_word
from vkinv.codec import (GaussCode, GaussCodeSyntaxError, GaussCodeValidationError, Parity,
                         Passage, Role, UnknownLabelError, chord_parity, chords, interlaced,
                         interlacement_graph, parse_gauss_code, render_gauss_code)


def test_parse_trefoil():
    k = parse_gauss_code(TREFOIL)
    assert len(k) == 6
    assert k.crossing_count == 3
    assert all(k.sign(lab) == -1 for lab in k.positions)


def test_parse_empty():
    k = parse_gauss_code("")
    assert len(k) == 0 and k.labels == []


@pytest.mark.parametrize("text,kind", [
    ("O1+U1-", "sign_mismatch"),
    ("O1+O1+", "roles"),
    ("O1+U1+O1+", "label_count"),
    ("O1+U2+", "label_count"),
])
def test_validation_errors(text, kind):
    with pytest.raises(GaussCodeValidationError) as e:
        parse_gauss_code(text)
    assert e.value.kind == kind


@pytest.mark.parametrize("text,pos", [
    ("X1+U1+", 0),
    ("O+U1+", 1),
    ("O1 U1+", 2),
    ("O1U1+", None),
    ("O1+,,U1+", 4),
    (",O1+U1+", 0),
    ("O1+U1+,", 6),
    ("O1+ U1+ ", 7),
])
def test_syntax_errors_report_position(text, pos):
    if pos is None:
        # labels are greedy: this is O(1U1)+, which tokenizes and then fails validation
        with pytest.raises(GaussCodeValidationError):
            parse_gauss_code(text)
        return
    with pytest.raises(GaussCodeSyntaxError) as e:
        parse_gauss_code(text)
    assert e.value.position == pos


def test_syntax_and_validation_are_distinguishable():
    assert not issubclass(GaussCodeSyntaxError, GaussCodeValidationError)
    assert not issubclass(GaussCodeValidationError, GaussCodeSyntaxError)


def test_separators_accepted_never_emitted():
    k = parse_gauss_code("O1-,U2- O3-,U1- O2-,U3-")
    assert render_gauss_code(k) == TREFOIL


@pytest.mark.parametrize("text", ["", TREFOIL, "U1+O1+", "Oab+Ux9-Uab+Ox9-"])
def test_render_round_trip(text):
    assert render_gauss_code(parse_gauss_code(text)) == text


@given(gauss_codes())
def test_parse_render_identity(k):
    assert parse_gauss_code(render_gauss_code(k)) == k


def test_labels_are_strings():
    k = parse_gauss_code("Oa+Ub+Ua+Ob+")
    assert k.labels == ["a", "b"]


def test_cyclic_equality_is_separate():
    a = parse_gauss_code(TREFOIL)
    b = a.rotated(2)
    assert a != b
    assert a.cyclic_equal(b)
    assert not a.cyclic_equal(parse_gauss_code(VIRTUAL_TREFOIL))
    assert a.normalized() == b.normalized()


def test_chords():
    assert [(c.label, c.endpoints) for c in chords(parse_gauss_code("O1-O2-U1-U2-"))] == [
        ("1", (0, 2)), ("2", (1, 3))]
    cs = chords(parse_gauss_code("O1+U1+"))
    assert [(c.label, c.endpoints, c.sign) for c in cs] == [("1", (0, 1), 1)]
    assert chords(parse_gauss_code("")) == []


@pytest.mark.parametrize("text,expected", [
    ("O1-O2-U1-U2-", True),
    ("O1+U1+O2+U2+", False),
    ("O1+O2+U2+U1+", False),
])
def test_interlaced(text, expected):
    assert interlaced(parse_gauss_code(text), "1", "2") is expected


def test_interlaced_unknown_label():
    with pytest.raises(UnknownLabelError):
        interlaced(parse_gauss_code(TREFOIL), "1", "9")


def test_interlacement_graph_examples():
    g = interlacement_graph(parse_gauss_code(TREFOIL))
    assert g.edges == {frozenset(p) for p in (("1", "2"), ("1", "3"), ("2", "3"))}
    assert interlacement_graph(parse_gauss_code("O1+U1+O2+U2+")).edges == frozenset()
    assert interlacement_graph(parse_gauss_code("")).vertices == ()


@pytest.mark.parametrize("text,label,parity", [
    (TREFOIL, "1", Parity.EVEN),
    ("O1-O2-U1-U2-", "1", Parity.ODD),
    ("O1+U1+", "1", Parity.EVEN),
])
def test_chord_parity(text, label, parity):
    assert chord_parity(parse_gauss_code(text), label) is parity


@given(gauss_codes(max_n=9))
def test_interlacement_matches_word_oracle(k):
    g = interlacement_graph(k)
    for c in k.positions:
        assert frozenset((c,)) not in g.edges
        assert g.degree(c) == degree(k, c)
        for d in k.positions:
            if c != d:
                assert (frozenset((c, d)) in g.edges) == interlaced_by_word(k, c, d)


@given(gauss_codes(max_n=12))
def test_odd_chord_count_even(k):
    assert sum(chord_parity(k, c) is Parity.ODD for c in k.positions) % 2 == 0


@given(gauss_codes(min_n=1, max_n=10), st.integers(0, 50))
def test_rotation_preserves_structure(k, r):
    k2 = k.rotated(r)
    assert interlacement_graph(k2).edges == interlacement_graph(k).edges
    assert all(chord_parity(k, c) == chord_parity(k2, c) for c in k.positions)


def test_passage_rejects_bad_sign():
    with pytest.raises(GaussCodeValidationError):
        Passage("1", Role.OVER, 0)


def test_too_many_crossings_rejected():
    ps = [Passage(str(i), r, 1) for i in range(10_001) for r in (Role.OVER, Role.UNDER)]
    with pytest.raises(GaussCodeValidationError) as e:
        GaussCode(tuple(ps))
    assert e.value.kind == "too_large"
