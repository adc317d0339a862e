from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import assert_canonical, ideal_strategy
from monodepth.constructions import grid_monomial, prop_ideal
from monodepth.errors import DegenerateIdealError, RingMismatchError
from monodepth.monomial import (
    MonomialIdeal,
    Ring,
    colon_ideal,
    colon_monomial,
    contains,
    divides,
    embed,
    ideal_sum,
    intersection,
    lcm,
    maximal_ideal,
    minimalize,
    mul,
    power,
    product,
)

XYZ = Ring(("x", "y", "z"))


def m(**kw):
    return XYZ.monomial(**kw)


def test_divides():
    assert divides(m(x=2, z=1), m(x=3, y=1, z=1))
    assert divides(m(x=3, y=1, z=1), m(x=3, y=1, z=1))
    assert not divides(m(y=2, z=1), m(x=3, y=1, z=1))
    with pytest.raises(RingMismatchError):
        divides((1, 0), (1, 0, 0))


def test_lcm():
    assert lcm(m(x=3), m(x=1, y=1, z=1)) == m(x=3, y=1, z=1)
    u = m(x=2, y=5)
    assert lcm(u, u) == u


@pytest.mark.parametrize("t,a,b,c", [(3, 1, 1, 0), (4, 0, 2, 1), (5, 2, 1, 1), (6, 0, 3, 2)])
def test_lcm_of_grid_step_pair(t, a, b, c):
    n = a + b + c
    got = lcm(grid_monomial(t, a, b, c), grid_monomial(t, a, b - 1, c + 1))
    assert got == (t * a + b, (t - 2) * (b - 1) + (t - 1) * (c + 1), n - a)


def test_minimalize():
    R = Ring(("x",))
    assert minimalize([(1,), (2,)]) == ((1,),)
    assert minimalize([(1, 2, 0), (1, 2, 1)]) == ((1, 2, 0),)
    assert minimalize([]) == ()
    assert MonomialIdeal(R, ((2,), (1,))).gens == ((1,),)


def test_minimalize_numpy_path_agrees(rng):
    gens = [tuple(rng.randint(0, 6) for _ in range(4)) for _ in range(3000)]
    fast = minimalize(gens)
    uniq = sorted(set(gens))
    slow = {u for u in uniq if not any(v != u and divides(v, u) for v in uniq)}
    assert set(fast) == slow


def test_sum_and_absorption():
    R = Ring.standard(1)
    assert ideal_sum(MonomialIdeal(R, ((2,),)), MonomialIdeal(R, ((1,),))).gens == ((1,),)
    I = prop_ideal(3)
    assert ideal_sum(I, MonomialIdeal.zero(XYZ)) == I


@pytest.mark.parametrize("n,d", [(5, 1), (6, 0), (7, 2)])
def test_sum_with_variables_keeps_all_generators(n, d):
    R = Ring.standard(n)
    j1 = embed(prop_ideal(3), R, {"x": "x1", "y": "x2", "z": "x3"})
    extra = MonomialIdeal(R, tuple(R.var(i) for i in range(3, n - d)))
    J = ideal_sum(j1, extra)
    assert len(J.gens) == 3 + (n - d - 3)
    assert_canonical(J)


def test_product():
    R = Ring(("x", "y"))
    xy = MonomialIdeal(R, ((1, 0), (0, 1)))
    assert product(xy, xy).gens == ((2, 0), (1, 1), (0, 2))
    I = prop_ideal(4)
    assert product(I, MonomialIdeal.unit(XYZ)) == I


def test_power_of_prop2_by_enumeration():
    # oracle: all products of two generators, minimal ones kept by direct pairwise test
    gens = [(2, 0, 0), (1, 0, 1), (0, 1, 1)]
    prods = {mul(g, h) for g in gens for h in gens}
    minimal = {u for u in prods if not any(v != u and divides(v, u) for v in prods)}
    assert minimal == {(4, 0, 0), (3, 0, 1), (2, 1, 1), (2, 0, 2), (1, 1, 2), (0, 2, 2)}
    assert power(prop_ideal(2), 2).gens == ((4, 0, 0), (3, 0, 1), (2, 1, 1), (2, 0, 2), (1, 1, 2), (0, 2, 2))


@pytest.mark.parametrize("t,n", [(3, 2), (4, 3), (5, 2), (2, 3)])
def test_power_generators_lie_in_grid(t, n):
    grid = {grid_monomial(t, a, b, n - a - b) for a in range(n + 1) for b in range(n + 1 - a)}
    assert set(power(prop_ideal(t), n).gens) <= grid


def test_power_rejects_zero():
    with pytest.raises(ValueError):
        power(prop_ideal(2), 0)
    assert power(prop_ideal(3), 1) == prop_ideal(3)


def test_intersection():
    R = Ring(("x", "y"))
    x, y = MonomialIdeal(R, ((1, 0),)), MonomialIdeal(R, ((0, 1),))
    assert intersection(x, y).gens == ((1, 1),)
    I = prop_ideal(3)
    assert intersection(I, I) == I


def test_colon():
    R = Ring(("x",))
    assert colon_monomial(MonomialIdeal(R, ((2,),)), (1,)).gens == ((1,),)
    I = prop_ideal(3)
    assert colon_monomial(I, XYZ.one()) == I
    assert colon_ideal(I, MonomialIdeal.unit(XYZ)) == I
    with pytest.raises(DegenerateIdealError):
        colon_ideal(I, MonomialIdeal.zero(XYZ))


def test_socle_element_of_prop3_cubed():
    I3 = power(prop_ideal(3), 3)
    u = m(x=3, y=3, z=2)
    assert contains(colon_ideal(I3, maximal_ideal(XYZ)), u)
    assert not contains(I3, u)


def test_contains():
    I = prop_ideal(5)
    assert all(contains(I, g) for g in I.gens)
    assert not contains(MonomialIdeal.zero(XYZ), m(x=1))


def test_embed():
    I = prop_ideal(2)
    assert embed(I, XYZ) == I
    R7 = Ring.standard(7)
    J = embed(I, R7, {"x": "x1", "y": "x2", "z": "x3"})
    assert len(J.gens) == 3 and J.used_variables() == (0, 1, 2)
    assert embed(I, R7, [4, 5, 6]).used_variables() == (4, 5, 6)
    with pytest.raises(ValueError):
        embed(I, R7, [0, 0, 1])


# properties


@settings(max_examples=150, deadline=None)
@given(ideal_strategy())
def test_minimalize_idempotent(I):
    assert minimalize(I.gens) == I.gens
    assert_canonical(I)


@settings(max_examples=60, deadline=None)
@given(ideal_strategy(max_arity=3, max_gens=4, max_exp=2), st.integers(1, 3), st.integers(1, 2))
def test_power_additive(I, a, b):
    assert product(power(I, a), power(I, b)) == power(I, a + b)


@settings(max_examples=100, deadline=None)
@given(ideal_strategy(max_arity=3), ideal_strategy(max_arity=3))
def test_product_contains_generator_products(I, J):
    if I.ring != J.ring:
        return
    P = product(I, J)
    assert_canonical(P)
    assert all(contains(P, mul(g, h)) for g in I.gens for h in J.gens)


@settings(max_examples=100, deadline=None)
@given(ideal_strategy(max_arity=3), ideal_strategy(max_arity=3))
def test_intersection_generators_in_both(I, J):
    if I.ring != J.ring:
        return
    for g in intersection(I, J).gens:
        assert contains(I, g) and contains(J, g)


@settings(max_examples=100, deadline=None)
@given(ideal_strategy(max_arity=3), ideal_strategy(max_arity=3), st.data())
def test_colon_adjunction(I, J, data):
    if I.ring != J.ring:
        return
    n = I.arity
    Q = colon_ideal(I, J)
    for v in cartesian(range(4), repeat=n):
        lhs = contains(Q, v)
        rhs = all(contains(I, mul(v, u)) for u in J.gens)
        assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(ideal_strategy(max_arity=3), st.tuples(*[st.integers(0, 3)] * 3))
def test_colon_monomial_membership(I, u):
    u = u[: I.arity]
    Q = colon_monomial(I, u)
    for v in cartesian(range(4), repeat=I.arity):
        assert contains(Q, v) == contains(I, mul(u, v))
