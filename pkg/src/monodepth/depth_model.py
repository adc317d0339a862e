"""Symbolic calculus on eventually constant depth sequences.

Sequences are indexed from k = 1.  ``f`` usually denotes k -> depth S/I^k and
``g`` denotes k -> depth I^(k-1)/I^k; the two agree whenever ``f`` is
nonincreasing.  For ideals in disjoint sets of variables the ``g`` functions
combine by min-plus convolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import DocumentError


@dataclass(frozen=True)
class DepthFunction:
    """Values ``prefix[0], prefix[1], ...`` at k = 1, 2, ..., then ``tail`` forever.

    Stored in canonical form: trailing prefix entries equal to the tail are
    dropped, so equality is structural.
    """

    prefix: tuple[int, ...]
    tail: int
    arity: int | None = field(default=None, compare=False)
    variables: frozenset[str] | None = field(default=None, compare=False)  # support, when known

    def __post_init__(self):
        p = [int(v) for v in self.prefix]
        t = int(self.tail)
        if t < 0 or any(v < 0 for v in p):
            raise ValueError("depth values are nonnegative")
        while p and p[-1] == t:
            p.pop()
        object.__setattr__(self, "prefix", tuple(p))
        object.__setattr__(self, "tail", t)

    @classmethod
    def constant(cls, value: int, arity: int | None = None) -> DepthFunction:
        return cls((), value, arity)

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError("depth functions are indexed from k = 1")
        return self.prefix[k - 1] if k <= len(self.prefix) else self.tail

    def values(self, k_max: int) -> list[int]:
        return [self(k) for k in range(1, k_max + 1)]

    @property
    def limit(self) -> int:
        return self.tail

    @property
    def dstab(self) -> int:
        return len(self.prefix) + 1

    def is_nonincreasing(self) -> bool:
        vals = list(self.prefix) + [self.tail]
        return all(a >= b for a, b in zip(vals, vals[1:]))

    def same_values(self, other: DepthFunction) -> bool:
        return self.prefix == other.prefix and self.tail == other.tail

    def to_dict(self) -> dict:
        return {"prefix": list(self.prefix), "tail": self.tail}

    @classmethod
    def from_dict(cls, doc: Any) -> DepthFunction:
        try:
            return cls(tuple(doc["prefix"]), doc["tail"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"bad depth function document: {exc}") from None

    def __str__(self) -> str:
        head = ", ".join(str(v) for v in self.prefix)
        return f"({head + ', ' if head else ''}{self.tail}, {self.tail}, ...)"


def f_to_g(f: DepthFunction) -> DepthFunction:
    """g(1) = f(1), g(k) = min(f(k-1) + 1, f(k))."""
    m = len(f.prefix)
    vals = [f(1)] + [min(f(k - 1) + 1, f(k)) for k in range(2, m + 2)]
    # past k = m + 1 both f(k-1) and f(k) equal the tail
    return DepthFunction(tuple(vals), f.tail, f.arity, f.variables)


def g_to_f(g: DepthFunction) -> DepthFunction:
    if not g.is_nonincreasing():
        raise ValueError(f"g_to_f needs a nonincreasing sequence, got {g}")
    return g


def min_convolution(gI: DepthFunction, gJ: DepthFunction) -> DepthFunction:
    """h(t) = min over i + j = t + 1 (i, j >= 1) of gI(i) + gJ(j).

    Once t > len(gI.prefix) + len(gJ.prefix), every split has i or j in a
    tail, and h(t) = min(gI.tail + min gJ, min gI + gJ.tail).
    """
    if gI.variables is not None and gJ.variables is not None and gI.variables & gJ.variables:
        shared = ", ".join(sorted(gI.variables & gJ.variables))
        raise ValueError(f"min-plus rule needs disjoint variables; both use {shared}")
    mI, mJ = len(gI.prefix), len(gJ.prefix)
    span = mI + mJ + 1
    vals = [min(gI(i) + gJ(t + 1 - i) for i in range(1, t + 1)) for t in range(1, span + 1)]
    tail = min(gI.tail + min(gJ.prefix + (gJ.tail,)), min(gI.prefix + (gI.tail,)) + gJ.tail)
    if vals[-1] != tail:
        raise AssertionError(f"tail analysis failed: h({span}) = {vals[-1]} but predicted {tail}")
    arity = gI.arity + gJ.arity if gI.arity is not None and gJ.arity is not None else None
    variables = gI.variables | gJ.variables if gI.variables is not None and gJ.variables is not None else None
    return DepthFunction(tuple(vals), tail, arity, variables)


def shift_free_vars(f: DepthFunction, b: int) -> DepthFunction:
    if b < 0:
        raise ValueError("number of free variables must be nonnegative")
    arity = f.arity + b if f.arity is not None else None
    return DepthFunction(tuple(v + b for v in f.prefix), f.tail + b, arity, f.variables)


def from_values(values: Sequence[int], tail: int) -> DepthFunction:
    return DepthFunction(tuple(values), tail)


def block_g(s: int, index: int | None = None) -> DepthFunction:
    """g of one block (x^(s+1), x y^(s-1) z, y^s z) in its own 3 variables."""
    names = None if index is None else frozenset(f"{v}{index}" for v in "xyz")
    return DepthFunction((1,) * s, 0, arity=3, variables=names)


def predict_spec(spec) -> DepthFunction:
    """Depth function of construct_from_spec(spec), derived block by block.

    Raises AssertionError if the derivation disagrees with the target f.
    """
    target = spec.induced()
    if spec.a == spec.b:
        prediction = DepthFunction.constant(spec.b, arity=spec.b + 1)
    else:
        g = block_g(spec.mult[0], 1)
        for i, s in enumerate(spec.mult[1:], start=2):
            g = min_convolution(g, block_g(s, i))
        prediction = shift_free_vars(g_to_f(g), spec.b)
    if not prediction.same_values(target):
        raise AssertionError(f"predicted {prediction} but the target function is {target}")
    return prediction


def predict_ndr(req) -> DepthFunction:
    from .constructions import InadmissibleRequest, hh_depth_prediction, ndr_violation

    why = ndr_violation(req)
    if why is not None:
        raise InadmissibleRequest(f"(n, d, r) = ({req.n}, {req.d}, {req.r}) is not realizable: {why}")
    n, d, r = req.n, req.d, req.r
    if r == 1:
        return DepthFunction.constant(d, arity=n)
    if d <= n - 3:
        g = block_g(r - 1)
        if n - d > 3:
            # (x4, ..., x_{n-d}) has g identically 0 in its own variables
            g = min_convolution(g, DepthFunction.constant(0, arity=n - d - 3))
        return shift_free_vars(g_to_f(g), d)
    return shift_free_vars(hh_depth_prediction(r), n - 3)
