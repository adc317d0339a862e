import pytest

from monodepth.betti import betti_table
from monodepth.constructions import prop_ideal
from monodepth.errors import OracleCapExceeded
from monodepth.linalg import GF2, QQ
from monodepth.monomial import MonomialIdeal, Ring, power
from monodepth.sampling import random_corpus, random_ideal
from monodepth.taylor import cross_check, taylor_betti, taylor_slices

XYZ = Ring(("x", "y", "z"))


def test_principal():
    I = MonomialIdeal(XYZ, ((1, 1, 0),))
    assert taylor_betti(I).entries == {(0, (1, 1, 0)): 1}


def test_two_generators_by_hand():
    # Taylor complex: e1, e2 in degrees xy, yz; e12 in degree xyz, no cancellation
    I = MonomialIdeal(XYZ, ((1, 1, 0), (0, 1, 1)))
    assert taylor_betti(I).entries == {(0, (1, 1, 0)): 1, (0, (0, 1, 1)): 1, (1, (1, 1, 1)): 1}


def test_prop3_agrees_with_engine():
    I = prop_ideal(3)
    assert taylor_betti(I).totals() == [3, 2]
    assert cross_check(I).ok


@pytest.mark.parametrize("t,k", [(t, k) for t in (2, 3, 4) for k in (1, 2, 3) if len(power(prop_ideal(t), k).gens) <= 10])
def test_agreement_on_prop_powers(t, k):
    assert cross_check(power(prop_ideal(t), k)).ok


def test_strands_are_complexes():
    for sl in taylor_slices(power(prop_ideal(2), 2)):
        for i, mat in sl.boundaries.items():
            lower = sl.boundaries.get(i - 1)
            if lower:
                for row in mat:
                    assert all(sum(row[k] * lower[k][c] for k in range(len(lower))) == 0 for c in range(len(lower[0])))


def test_generator_cap():
    with pytest.raises(OracleCapExceeded):
        taylor_betti(power(prop_ideal(2), 5), cap=16)


def test_cross_check_reports_difference(monkeypatch):
    import monodepth.betti as betti_mod

    I = prop_ideal(3)
    real = betti_mod.betti_table

    def broken(ideal, fld=GF2, cap=None):
        t = real(ideal, fld, cap)
        entries = dict(t.entries)
        entries.pop(next(k for k in entries if k[0] == 1))
        return type(t)(t.arity, entries)

    monkeypatch.setattr(betti_mod, "betti_table", broken)
    res = cross_check(I)
    assert not res.ok and res.first_difference[0] == 1


def test_random_corpus_is_seeded_and_within_distribution():
    a, b = random_corpus(7, 50), random_corpus(7, 50)
    assert a == b
    assert random_corpus(8, 50) != a
    for I in a:
        assert 1 <= I.arity <= 4 and 1 <= len(I.gens) <= 6
        assert all(0 <= e <= 4 for g in I.gens for e in g)
        assert not I.is_unit()


def test_agreement_over_rationals_on_small_corpus():
    for I in random_corpus(11, 40):
        assert cross_check(I, QQ).ok
        assert betti_table(I, QQ).entries == taylor_betti(I, QQ).entries


def test_random_ideal_accepts_rng():
    import random

    I = random_ideal(random.Random(3))
    assert not I.is_unit() and not I.is_zero()
