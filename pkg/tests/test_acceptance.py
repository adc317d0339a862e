"""Acceptance criteria 1-10.  Every comparison is exact.

Each test prints one ``[PASS]``/``[FAIL]`` line; the lines are repeated in
the pytest terminal summary.  Run with ``pytest tests/test_acceptance.py -s``.
"""

import random
from functools import lru_cache
from itertools import combinations_with_replacement

import pytest

from conftest import ACCEPTANCE_LINES
from monodepth.betti import (
    betti_table,
    depth_of_quotient,
    depth_prefix,
    observed_limit_and_dstab,
    socle_nonzero,
)
from monodepth.buchberger import all_checks
from monodepth.constructions import (
    DepthSpec,
    WitnessRequest,
    admissible_ndr,
    construct_from_spec,
    example_fixtures,
    grid_monomial,
    ndr_witness,
    prop_ideal,
    socle_witness,
)
from monodepth.depth_model import DepthFunction, min_convolution, predict_ndr, predict_spec
from monodepth.errors import CertificateError
from monodepth.linalg import GF2, GF3
from monodepth.monomial import (
    Ring,
    colon_ideal,
    contains,
    divides,
    embed,
    minimalize,
    mul,
    power,
    product,
)
from monodepth.sampling import random_corpus, random_ideal
from monodepth.taylor import cross_check

pytestmark = pytest.mark.acceptance


def report(number, title, failures, checked):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({checked} checked, {len(failures)} failed)"
    if failures:
        line += f"; first: {failures[0]}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failures, line


@lru_cache(maxsize=None)
def prop_power_table(t, k):
    return betti_table(power(prop_ideal(t), k))


def test_criterion_1_prop_depth_grid():
    failures, checked = [], 0
    for t in range(2, 7):
        computed = depth_prefix(prop_ideal(t), t + 2)
        expected = [1 if k <= t - 1 else 0 for k in range(1, t + 3)]
        checked += len(expected)
        if computed != expected:
            failures.append(f"t={t}: computed {computed}, expected {expected}")
    report(1, "depth of B/I^k is 1 for k <= t-1 and 0 for k >= t", failures, checked)


def test_criterion_2_pd_structure():
    failures, checked = [], 0
    for t in range(2, 7):
        for k in range(1, t):
            checked += 1
            table = prop_power_table(t, k)
            b1 = (k + 1) * (k + 2) // 2 - 1
            degrees = {sum(b) for (i, b) in table.entries if i == 0}
            if table.beta(1) != b1 or table.pd > 1 or degrees != {k * t}:
                failures.append(f"t={t} k={k}: totals {table.totals()}, beta0 degrees {sorted(degrees)}")
    report(2, "beta_1 = (k+1)(k+2)/2 - 1, beta_>=2 = 0, beta_0 in degree kt", failures, checked)


def test_criterion_3_socle_witnesses():
    failures, checked = [], 0
    for t in range(2, 6):
        for n in range(t, t + 3):
            checked += 1
            In = power(prop_ideal(t), n)
            try:
                cert = socle_witness(t, n)
            except CertificateError as exc:
                failures.append(f"t={t} n={n}: {exc}")
                continue
            expected_u = (t * n - t * t + t, t * t - 2 * t, t - 1)
            ok = cert.u == expected_u and not contains(In, cert.u)
            for v, var in (("x", (1, 0, 0)), ("y", (0, 1, 0)), ("z", (0, 0, 1))):
                label, w = cert.divisors[v]
                shifted = mul(cert.u, var)
                ok = ok and sum(label) == n and w == grid_monomial(t, *label)
                ok = ok and contains(In, w) and divides(w, shifted)
            if not ok:
                failures.append(f"t={t} n={n}: certificate does not check")
    report(3, "u not in I^n and xu, yu, zu in I^n via the named divisors", failures, checked)


def test_criterion_4_fixtures_I_J():
    failures, checked = [], 0
    for name, fx in sorted(example_fixtures().items()):
        for fld in (GF2, GF3):
            checked += 1
            computed = tuple(depth_prefix(fx.ideal, 5, fld))
            if computed != fx.expected_prefix:
                failures.append(f"{name} over {fld}: computed {computed}, expected {fx.expected_prefix}")
    report(4, "fixture I -> (2,2,0,0,0), fixture J -> (2,2,1,0,0) over GF(2) and GF(3)", failures, checked)


def all_small_specs():
    for b in range(0, 2):
        for gap in range(0, 3):
            for mult in combinations_with_replacement(range(1, 4), gap):
                yield DepthSpec(b + gap, b, tuple(mult))


def test_criterion_5_spec_constructions():
    failures, checked = [], 0
    for spec in all_small_specs():
        checked += 1
        expected = spec.induced().values(4)
        computed = depth_prefix(construct_from_spec(spec), 4)
        if computed != expected:
            failures.append(f"{spec.to_dict()}: computed {computed}, expected {expected}")
    report(5, "every valid spec with a-b <= 2, s_i <= 3, b <= 1 realized for k <= 4", failures, checked)


def test_criterion_6_ndr_witnesses():
    failures, checked = [], 0
    for n in (3, 4, 5):
        for d in range(0, n):
            for r in range(1, 4):
                req = WitnessRequest(n, d, r)
                if not admissible_ndr(req):
                    continue
                checked += 1
                kmax = r + 2
                expected = predict_ndr(req).values(kmax)
                computed = depth_prefix(ndr_witness(req).ideal, kmax)
                stab = observed_limit_and_dstab(computed)
                if computed != expected or stab is None or (stab.limit, stab.dstab) != (d, r):
                    failures.append(f"(n,d,r)=({n},{d},{r}): computed {computed}, predicted {expected}, observed {stab}")
    report(6, "(n,d,r) witnesses match the prediction with observed dstab r", failures, checked)


def test_criterion_7_oracle_equivalence():
    failures, checked = [], 0
    for idx, I in enumerate(random_corpus(7, 200)):
        checked += 1
        res = cross_check(I, GF2)
        if not res.ok:
            failures.append(f"#{idx} {I}: (i, b, engine, oracle) = {res.first_difference}")
        if socle_nonzero(I) != (depth_of_quotient(I, GF2) == 0):
            failures.append(f"#{idx} {I}: socle test disagrees with depth")
    report(7, "engine = Taylor oracle on 200 seeded ideals; socle test <=> depth 0", failures, checked)


def test_criterion_8_buchberger_checks():
    failures, checked = [], 0
    for t in range(2, 7):
        for k in range(1, t):
            for rep in all_checks(t, k):
                checked += 1
                if not rep.ok:
                    failures.append(f"t={t} k={k}: {rep.line()}")
    report(8, "covers are edges, telescoping, degree order, |Sigma| = beta_1 for 2 <= t <= 6, k < t", failures, checked)


def test_criterion_9_model_soundness():
    rng = random.Random(9)
    failures = []
    for _ in range(1000):
        a = rng.randint(0, 6)
        b = rng.randint(0, a)
        spec = DepthSpec(a, b, tuple(sorted(rng.randint(1, 6) for _ in range(a - b))))
        try:
            pred = predict_spec(spec)
        except AssertionError as exc:
            failures.append(f"{spec.to_dict()}: {exc}")
            continue
        if not pred.same_values(spec.induced()):
            failures.append(f"{spec.to_dict()}: predicted {pred}, induced {spec.induced()}")
    report(9, "predict_spec equals the induced f on 1000 seeded specs", failures, 1000)


def _random_function(rng):
    return DepthFunction(tuple(rng.randint(0, 6) for _ in range(rng.randint(0, 5))), rng.randint(0, 6))


def test_criterion_10_property_suite():
    rng = random.Random(10)
    failures, checked = [], 0
    instances = 100

    for _ in range(instances):
        I = random_ideal(rng, max_arity=4, max_gens=8, max_exp=4)
        raw = [tuple(rng.randint(0, 4) for _ in range(I.arity)) for _ in range(rng.randint(1, 10))]
        once = minimalize(raw)
        checked += 1
        if minimalize(once) != once or minimalize(I.gens) != I.gens:
            failures.append(f"minimalize not idempotent on {raw}")

    for _ in range(instances):
        I = random_ideal(rng, max_arity=3, max_gens=3, max_exp=2)
        a, b = rng.randint(1, 3), rng.randint(1, 2)
        checked += 1
        if product(power(I, a), power(I, b)) != power(I, a + b):
            failures.append(f"power additivity fails for {I}, a={a}, b={b}")

    for _ in range(instances):
        n = rng.randint(1, 3)
        I = random_ideal(rng, arity=n, max_gens=4, max_exp=3)
        J = random_ideal(rng, arity=n, max_gens=3, max_exp=2)
        Q = colon_ideal(I, J)
        checked += 1
        for _ in range(20):
            v = tuple(rng.randint(0, 4) for _ in range(n))
            if contains(Q, v) != all(contains(I, mul(v, u)) for u in J.gens):
                failures.append(f"colon adjunction fails for {I} : {J} at {v}")
                break

    for _ in range(instances):
        I = random_ideal(rng, max_arity=3, max_gens=4, max_exp=3)
        extra = rng.randint(1, 2)
        R = Ring.standard(I.arity + extra)
        J = embed(I, R, rng.sample(range(I.arity + extra), I.arity))
        checked += 1
        if depth_of_quotient(J) != depth_of_quotient(I) + extra:
            failures.append(f"embedding {I} with {extra} new variables")

    for _ in range(instances):
        f, g, h = (_random_function(rng) for _ in range(3))
        checked += 1
        if min_convolution(min_convolution(f, g), h) != min_convolution(f, min_convolution(g, h)):
            failures.append(f"associativity fails for {f}, {g}, {h}")

    report(10, "minimalize idempotence, power additivity, colon adjunction, embed shift, convolution associativity",
           failures, checked)
