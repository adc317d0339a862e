"""Ideal families with prescribed depth behaviour.

* ``prop_ideal(t) = (x^t, x y^(t-2) z, y^(t-1) z)``: depth K[x,y,z]/I^k is 1
  for k < t and 0 from k = t on.
* ``construct_from_spec``: a sum of such blocks in disjoint variables (plus
  free variables) realizing any nonincreasing depth function with unit drops
  whose level multiplicities are nondecreasing.
* ``ndr_witness``: an ideal with prescribed limit depth and depth stability
  number in a given number of variables.
* ``example_fixtures``: two 6-variable ideals whose depth functions fall
  outside the block construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .depth_model import DepthFunction
from .errors import CertificateError, DocumentError, InadmissibleRequest, InvalidSpecError
from .monomial import (
    Monomial,
    MonomialIdeal,
    Ring,
    contains,
    divides,
    embed,
    ideal_sum,
    mul,
    power,
    product,
)

PROP_RING = Ring(("x", "y", "z"))


def grid_monomial(t: int, a: int, b: int, c: int) -> Monomial:
    """w(a, b, c) = (x^t)^a (x y^(t-2) z)^b (y^(t-1) z)^c."""
    return (t * a + b, (t - 2) * b + (t - 1) * c, b + c)


def prop_ideal(t: int) -> MonomialIdeal:
    if t < 2:
        raise ValueError(f"prop_ideal needs t >= 2, got {t}")
    return MonomialIdeal(PROP_RING, (grid_monomial(t, 1, 0, 0), grid_monomial(t, 0, 1, 0), grid_monomial(t, 0, 0, 1)))


def block_ring(blocks: int, free: int = 0) -> Ring:
    names = [f"{v}{i}" for i in range(1, blocks + 1) for v in "xyz"]
    names += [f"w{j}" for j in range(1, free + 1)]
    return Ring(tuple(names))


def block_ideal(k: int, i: int, ring: Ring) -> MonomialIdeal:
    """(x_i^(k+1), x_i y_i^(k-1) z_i, y_i^k z_i): prop_ideal(k + 1) on block i."""
    if k < 1:
        raise ValueError("block multiplicity must be >= 1")
    names = {"x": f"x{i}", "y": f"y{i}", "z": f"z{i}"}
    missing = [v for v in names.values() if v not in ring.var_names]
    if missing:
        raise ValueError(f"ring lacks block variables {missing}")
    return embed(prop_ideal(k + 1), ring, names)


@dataclass(frozen=True)
class SocleCertificate:
    t: int
    n: int
    u: Monomial
    divisors: dict[str, tuple[tuple[int, int, int], Monomial]]  # variable -> (label, w(label))


def socle_witness(t: int, n: int) -> SocleCertificate:
    """u = x^(tn - t^2 + t) y^(t^2 - 2t) z^(t-1), certified to lie in (I^n : m) outside I^n."""
    if t < 2 or n < t:
        raise ValueError(f"socle witness needs t >= 2 and n >= t, got t={t}, n={n}")
    In = power(prop_ideal(t), n)
    u = (t * n - t * t + t, t * t - 2 * t, t - 1)
    if contains(In, u):
        raise CertificateError(f"u = {u} lies in I^{n} for t = {t}")
    labels = {"x": (n - t + 1, 1, t - 2), "y": (n - t + 1, 0, t - 1), "z": (n - t, t, 0)}
    divisors = {}
    for v, label in labels.items():
        w = grid_monomial(t, *label)
        shifted = mul(u, PROP_RING.var(v))
        if sum(label) != n or not divides(w, shifted) or not contains(In, shifted):
            raise CertificateError(f"w{label} does not divide {v}*u at t = {t}, n = {n}")
        divisors[v] = (label, w)
    return SocleCertificate(t, n, u, divisors)


# --------------------------------------------------------------------------
# depth specs


@dataclass(frozen=True)
class DepthSpec:
    """Target f with f(1) = a, limit b, and level a-i+1 taken s_i times.

    ``mult[i-1]`` is s_i; the construction needs s_1 <= s_2 <= ... .
    """

    a: int
    b: int
    mult: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(s) for s in self.mult))
        if not self.a >= self.b >= 0:
            raise InvalidSpecError("range", None, f"need a >= b >= 0, got a={self.a}, b={self.b}")
        if len(self.mult) != self.a - self.b:
            raise InvalidSpecError("range", None, f"need {self.a - self.b} multiplicities, got {len(self.mult)}")
        if any(s < 1 for s in self.mult):
            raise InvalidSpecError("range", None, "multiplicities must be positive")
        for i in range(1, len(self.mult)):
            if self.mult[i] < self.mult[i - 1]:
                k = sum(self.mult[:i]) + 1
                raise InvalidSpecError(
                    "chain",
                    k,
                    f"level {self.a - i} occurs {self.mult[i]} times but level {self.a - i + 1} occurs "
                    f"{self.mult[i - 1]} times (multiplicities must be nondecreasing), at k = {k}",
                )

    def induced(self) -> DepthFunction:
        prefix = []
        for i, s in enumerate(self.mult, start=1):
            prefix += [self.a - i + 1] * s
        return DepthFunction(tuple(prefix), self.b)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "mult": list(self.mult)}


def spec_from_values(prefix: Sequence[int], tail: int) -> DepthSpec:
    f = DepthFunction(tuple(prefix), tail)  # canonical: trailing tail values dropped
    vals = list(f.prefix) + [f.tail]
    for k in range(1, len(vals)):
        prev, cur = vals[k - 1], vals[k]
        if cur > prev:
            raise InvalidSpecError("nonincreasing", k + 1, f"f({k + 1}) = {cur} > f({k}) = {prev}: not nonincreasing")
        if prev - cur > 1:
            raise InvalidSpecError(
                "unit-drop", k, f"f({k}) - f({k + 1}) = {prev - cur} > 1: drops must be at most 1"
            )
    a = vals[0]
    mult = tuple(f.prefix.count(v) for v in range(a, f.tail, -1))
    return DepthSpec(a, f.tail, mult)


def validate_spec(candidate: Any) -> DepthSpec:
    """Accept a DepthSpec, a ``(prefix, tail)`` pair, or a spec document."""
    if isinstance(candidate, DepthSpec):
        return candidate
    if isinstance(candidate, DepthFunction):
        return spec_from_values(candidate.prefix, candidate.tail)
    if isinstance(candidate, dict):
        if "prefix" in candidate:
            if "tail" not in candidate:
                raise DocumentError("spec document with a prefix needs a tail")
            return spec_from_values(_int_list(candidate["prefix"]), _int(candidate["tail"]))
        if {"a", "b", "mult"} <= set(candidate):
            return DepthSpec(_int(candidate["a"]), _int(candidate["b"]), tuple(_int_list(candidate["mult"])))
        raise DocumentError("spec document needs either prefix/tail or a/b/mult")
    if isinstance(candidate, (tuple, list)) and len(candidate) == 2:
        return spec_from_values(list(candidate[0]), int(candidate[1]))
    raise DocumentError(f"cannot read a depth spec from {candidate!r}")


def _int(x: Any) -> int:
    if type(x) is not int or x < 0:
        raise DocumentError(f"expected a nonnegative integer, got {x!r}")
    return x


def _int_list(xs: Any) -> list[int]:
    if not isinstance(xs, list):
        raise DocumentError(f"expected an array of integers, got {xs!r}")
    return [_int(x) for x in xs]


def construct_from_spec(spec: DepthSpec) -> MonomialIdeal:
    """Sum of block ideals I_{s_i, i} in K[x_i, y_i, z_i, ..., w_1..w_b].

    A constant spec (a = b) has no blocks; it gets (x1) in K[x1, w_1..w_b].
    """
    if spec.a == spec.b:
        ring = Ring(("x1",) + tuple(f"w{j}" for j in range(1, spec.b + 1)))
        return MonomialIdeal(ring, (ring.var(0),))
    ring = block_ring(len(spec.mult), spec.b)
    ideal = MonomialIdeal.zero(ring)
    for i, s in enumerate(spec.mult, start=1):
        ideal = ideal_sum(ideal, block_ideal(s, i, ring))
    return ideal


# --------------------------------------------------------------------------
# (n, d, r) witnesses


@dataclass(frozen=True)
class WitnessRequest:
    n: int
    d: int
    r: int


def ndr_violation(req: WitnessRequest) -> str | None:
    """None if (n, d, r) is realizable, otherwise the condition it breaks."""
    n, d, r = req.n, req.d, req.r
    if n < 1 or d < 0 or r < 1:
        return "need n >= 1, d >= 0, r >= 1"
    if n == 1:
        return None if (d, r) == (0, 1) else "n=1 forces d=0 and r=1"
    if n == 2:
        return None if d <= 1 and r == 1 else "n=2 forces 0 <= d <= 1 and r=1"
    if d <= n - 2:
        return None
    if d == n - 1:
        return None if r == 1 else "d=n-1 and r=1: limit depth n-1 forces r=1"
    return f"0 <= d <= n-2 and r >= 1, or d=n-1 and r=1: d={d} exceeds n-1={n - 1}"


def admissible_ndr(req: WitnessRequest) -> bool:
    return ndr_violation(req) is None


def hh_ideal(r: int) -> MonomialIdeal:
    """(x1^(r+2), x1^(r+1) x2, x1 x2^(r+1), x2^(r+2), x1^r x2^2 x3) in K[x1, x2, x3]."""
    if r < 1:
        raise ValueError("r must be >= 1")
    ring = Ring.standard(3)
    return MonomialIdeal(
        ring, ((r + 2, 0, 0), (r + 1, 1, 0), (1, r + 1, 0), (0, r + 2, 0), (r, 2, 1))
    )


def hh_depth_prediction(r: int) -> DepthFunction:
    """Depth of K[x1,x2,x3]/J^k for J = hh_ideal(r): 0 for k < r, then 1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return DepthFunction((0,) * (r - 1), 1, arity=3)


@dataclass(frozen=True)
class NdrWitness:
    ideal: MonomialIdeal
    case: str  # "principal", "variables", "prop+variables", "hh"
    limit: int
    dstab: int


def ndr_witness(req: WitnessRequest) -> NdrWitness:
    why = ndr_violation(req)
    if why is not None:
        raise InadmissibleRequest(f"(n, d, r) = ({req.n}, {req.d}, {req.r}) is not realizable: {why}")
    n, d, r = req.n, req.d, req.r
    ring = Ring.standard(n)
    if r == 1:
        if d == n - 1:
            return NdrWitness(MonomialIdeal(ring, (ring.var(0),)), "principal", d, r)
        gens = tuple(ring.var(i) for i in range(n - d))
        return NdrWitness(MonomialIdeal(ring, gens), "variables", d, r)
    if d <= n - 3:
        j1 = embed(prop_ideal(r), ring, {"x": "x1", "y": "x2", "z": "x3"})
        extra = MonomialIdeal(ring, tuple(ring.var(i) for i in range(3, n - d)))
        return NdrWitness(ideal_sum(j1, extra), "prop+variables", d, r)
    j3 = embed(hh_ideal(r), ring, {"x1": "x1", "x2": "x2", "x3": "x3"})
    return NdrWitness(j3, "hh", d, r)


# --------------------------------------------------------------------------
# fixtures outside the block construction


@dataclass(frozen=True)
class ExampleFixture:
    name: str
    ideal: MonomialIdeal
    raw_generators: tuple[Monomial, ...]  # before minimalization
    expected_prefix: tuple[int, ...]


def _example(name: str, p: int, expected: tuple[int, ...]) -> ExampleFixture:
    """p = 3 gives I, p = 4 gives J."""
    ring = Ring.standard(6)
    left = ((p, 0, 0, 0, 0, 0), (1, p - 2, 1, 0, 0, 0), (0, p - 1, 1, 0, 0, 0))
    right = tuple(g[3:] + g[:3] for g in left)
    hh = ((p + 1, 0, 0, 0, 0, 0), (p, 1, 0, 0, 0, 0), (1, p, 0, 0, 0, 0), (0, p + 1, 0, 0, 0, 0), (p - 1, 2, 1, 0, 0, 0))
    raw = tuple(mul(g, h) for g in left for h in right) + hh
    ideal = ideal_sum(
        product(MonomialIdeal(ring, left), MonomialIdeal(ring, right)),
        MonomialIdeal(ring, hh),
    )
    return ExampleFixture(name, ideal, raw, expected)


def example_fixtures() -> dict[str, ExampleFixture]:
    return {
        "I": _example("I", 3, (2, 2, 0, 0, 0)),
        "J": _example("J", 4, (2, 2, 1, 0, 0)),
    }
