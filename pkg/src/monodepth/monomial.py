"""Exact arithmetic on monomials and monomial ideals.

A monomial is a plain tuple of nonnegative exponents; its ring is implied by
the context (the ideal that holds it).  Ideals keep their generators
minimalized and sorted, so two ideals are equal exactly when their generator
tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DegenerateIdealError, RingMismatchError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> Ring:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def arity(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def one(self) -> Monomial:
        return (0,) * self.arity

    def var(self, name_or_index: str | int, power: int = 1) -> Monomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.arity
        e[i] = power
        return tuple(e)

    def monomial(self, **powers: int) -> Monomial:
        e = [0] * self.arity
        for name, p in powers.items():
            e[self.index(name)] = p
        return check_monomial(e, self.arity)


def check_monomial(exps: Iterable[int], arity: int) -> Monomial:
    m = tuple(int(e) for e in exps)
    if len(m) != arity:
        raise RingMismatchError(f"monomial {m} has {len(m)} exponents, ring has {arity}")
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


def _same_arity(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise RingMismatchError(f"arity mismatch: {len(u)} vs {len(v)}")


def divides(u: Monomial, v: Monomial) -> bool:
    _same_arity(u, v)
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _same_arity(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _same_arity(u, v)
    return tuple(a if a <= b else b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    _same_arity(u, v)
    return tuple(a + b for a, b in zip(u, v))


def monus(u: Monomial, v: Monomial) -> Monomial:
    """u / gcd(u, v): coordinatewise truncated subtraction."""
    _same_arity(u, v)
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """Exact quotient u / v; raises if v does not divide u."""
    if not divides(v, u):
        raise ValueError(f"{v} does not divide {u}")
    return tuple(a - b for a, b in zip(u, v))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(u) if e)


def canonical_key(u: Monomial):
    # degree ascending, then lexicographically descending exponent vectors
    return (sum(u), tuple(-e for e in u))


_NUMPY_THRESHOLD = 1500


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal elements of ``gens``, deduplicated, canonically ordered."""
    cands = sorted(set(gens), key=canonical_key)
    if not cands:
        return ()
    n = len(cands[0])
    if any(len(u) != n for u in cands):
        raise RingMismatchError("generators of different arity")
    if len(cands) > _NUMPY_THRESHOLD:
        keep = minimal_rows_mask(np.array(cands, dtype=np.int64))
        return tuple(u for u, k in zip(cands, keep) if k)
    kept: list[Monomial] = []
    for u in cands:
        for v in kept:
            # kept elements have degree <= deg u, so only divisibility matters
            if all(a <= b for a, b in zip(v, u)):
                break
        else:
            kept.append(u)
    return tuple(kept)


def narrow(arr: np.ndarray) -> np.ndarray:
    """Smallest unsigned dtype holding the exponents (comparisons only)."""
    top = int(arr.max()) if arr.size else 0
    if top < 2**8:
        return arr.astype(np.uint8)
    if top < 2**16:
        return arr.astype(np.uint16)
    return arr


def divisibility_matrix(divisors: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """D[t, d] = divisors[d] divides targets[t]."""
    out = divisors[None, :, 0] <= targets[:, None, 0]
    for j in range(1, divisors.shape[1]):
        out &= divisors[None, :, j] <= targets[:, None, j]
    return out


def minimal_rows_mask(arr: np.ndarray) -> np.ndarray:
    """Boolean mask of rows not divisible by any other row; rows must be distinct."""
    N = len(arr)
    keep = np.ones(N, dtype=bool)
    order = np.argsort(arr.sum(axis=1), kind="stable")
    srt = narrow(arr[order])
    chunk = max(1, 8_000_000 // max(1, N))
    for start in range(0, N, chunk):
        block = srt[start:start + chunk]
        stop = start + len(block)
        # a row can only be divided by rows of no larger degree
        div = divisibility_matrix(srt[:stop], block).sum(axis=1)
        keep[order[start:stop]] = div <= 1
    return keep


def members_mask(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask: which candidate rows lie in the ideal generated by ``gens``."""
    out = np.zeros(len(cands), dtype=bool)
    if len(gens) == 0 or len(cands) == 0:
        return out
    both = narrow(np.vstack([cands, gens]))
    cands, gens = both[:len(cands)], both[len(cands):]
    chunk = max(1, 8_000_000 // len(gens))
    for start in range(0, len(cands), chunk):
        out[start:start + chunk] = divisibility_matrix(gens, cands[start:start + chunk]).any(axis=1)
    return out


def is_minimal(gens: Sequence[Monomial]) -> bool:
    for i, u in enumerate(gens):
        for j, v in enumerate(gens):
            if i != j and divides(u, v):
                return False
    return True


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The generator tuple is minimalized and canonically ordered on
    construction.  An empty tuple is the zero ideal; ``(1,)`` the unit ideal.
    """

    ring: Ring
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        n = self.ring.arity
        checked = [check_monomial(g, n) for g in self.gens]
        object.__setattr__(self, "gens", minimalize(checked))

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, (ring.one(),))

    @property
    def arity(self) -> int:
        return self.ring.arity

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def require_proper_nonzero(self) -> None:
        if self.is_zero():
            raise DegenerateIdealError("the zero ideal has no depth function")
        if self.is_unit():
            raise DegenerateIdealError("the unit ideal is not proper")

    def used_variables(self) -> tuple[int, ...]:
        used = set()
        for g in self.gens:
            used.update(support(g))
        return tuple(sorted(used))

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.ring) for g in self.gens) + ")"


def format_monomial(u: Monomial, ring: Ring) -> str:
    parts = []
    for name, e in zip(ring.var_names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring.var_names} vs {J.ring.var_names}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(mul(g, h) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power exponent must be >= 1 (use the ring itself for I^0)")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def powers(I: MonomialIdeal, k_max: int):
    """Yield I, I^2, ..., I^k_max, reusing each power for the next."""
    current = I
    for k in range(1, k_max + 1):
        if k > 1:
            current = product(current, I)
        yield current


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(lcm(g, h) for g in I.gens for h in J.gens))


def colon_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    u = check_monomial(u, I.arity)
    return MonomialIdeal(I.ring, tuple(monus(g, u) for g in I.gens))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if J.is_zero():
        raise DegenerateIdealError("colon by the zero ideal")
    result = colon_monomial(I, J.gens[0])
    for u in J.gens[1:]:
        result = intersection(result, colon_monomial(I, u))
    return result


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.arity:
        raise RingMismatchError(f"monomial of arity {len(u)} tested against ideal of arity {I.arity}")
    return any(all(a <= b for a, b in zip(g, u)) for g in I.gens)


def maximal_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(ring.var(i) for i in range(ring.arity)))


def embed(
    I: MonomialIdeal,
    target: Ring,
    var_map: Mapping[str, str] | Sequence[int] | None = None,
) -> MonomialIdeal:
    """Re-index ``I`` into ``target``.

    ``var_map`` sends source variable names to target names, or is a sequence
    of target indices (one per source variable).  The default maps source
    variables onto target variables of the same name.
    """
    src = I.ring
    if var_map is None:
        idx = [target.index(v) for v in src.var_names]
    elif isinstance(var_map, Mapping):
        idx = [target.index(var_map[v]) for v in src.var_names]
    else:
        idx = [int(i) for i in var_map]
        if len(idx) != src.arity:
            raise ValueError("var_map must list one target index per source variable")
        if any(not 0 <= i < target.arity for i in idx):
            raise ValueError("var_map index out of range")
    if len(set(idx)) != len(idx):
        raise ValueError("var_map is not injective")
    gens = []
    for g in I.gens:
        e = [0] * target.arity
        for i, x in zip(idx, g):
            e[i] = x
        gens.append(tuple(e))
    return MonomialIdeal(target, tuple(gens))
