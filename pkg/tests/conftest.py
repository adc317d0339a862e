import random

import pytest
from hypothesis import strategies as st

from monodepth.monomial import MonomialIdeal, Ring, is_minimal


def ideal_strategy(max_arity=4, max_gens=4, max_exp=3, min_arity=1):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_arity, max_arity))
        mono = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
        gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
        return MonomialIdeal(Ring.standard(n), tuple(gens))

    return build()


def assert_canonical(I: MonomialIdeal):
    assert is_minimal(I.gens)
    assert MonomialIdeal(I.ring, I.gens).gens == I.gens


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
