import random

import hypothesis
import pytest
from hypothesis import strategies as st

from vkinv.moves import slots_to_code

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=30, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def gauss_codes(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(2 * n)))
    chord_of = [0] * (2 * n)
    for k in range(n):
        chord_of[order[2 * k]] = chord_of[order[2 * k + 1]] = k
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    over_first = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return slots_to_code(chord_of, signs, over_first)


@pytest.fixture
def rng():
    return random.Random(12345)



# criterion number -> list of (ok, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE.setdefault(number, []).append((ok, detail))
        print(f"CRITERION {number}: {'PASS' if ok else 'FAIL'} {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p[0] for p in parts)
        detail = "; ".join(p[1] for p in parts)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
