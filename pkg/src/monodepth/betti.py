"""Multigraded Betti numbers of monomial ideals and depth of their quotients.

For a multidegree b, beta_{i,b}(I) is the dimension of the reduced homology in
degree i-1 of the upper Koszul complex

    K^b(I) = { tau subset of supp(b) : x^(b - tau) in I },

and it can only be nonzero when b is an lcm of generators.  So we close the
generator set under lcm, build K^b for every element, and read off ranks.

K^b is cheap to describe: a generator g dividing x^b contributes the facet
supp(b) minus {v : g_v = b_v}; the complex is everything below those facets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import LatticeCapExceeded
from .linalg import GF2, FieldSpec, rank
from .monomial import (
    Monomial,
    MonomialIdeal,
    canonical_key,
    check_monomial,
    contains,
    divisibility_matrix,
    members_mask,
    minimal_rows_mask,
    powers,
    support,
)

DEFAULT_LATTICE_CAP = 200_000
CAP_ENV_VAR = "MONODEPTH_LATTICE_CAP"


def default_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_LATTICE_CAP


# --------------------------------------------------------------------------
# lcm lattice


@dataclass(frozen=True)
class MultidegreeLattice:
    ideal: MonomialIdeal
    elements: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, b: Monomial) -> bool:
        return b in set(self.elements)


def _encoder(arr: np.ndarray):
    """Mixed-radix row encoder for exponent arrays, or None if it could overflow int64."""
    bases = arr.max(axis=0).astype(object) + 1
    total = 1
    for b in bases:
        total *= int(b)
    if total >= 2**62:
        return None
    weights = np.ones(arr.shape[1], dtype=np.int64)
    for j in range(arr.shape[1] - 2, -1, -1):
        weights[j] = weights[j + 1] * int(bases[j + 1])
    return weights


def _lattice_array(gens: Sequence[Monomial], cap: int) -> np.ndarray:
    G = np.array(gens, dtype=np.int64)
    weights = _encoder(G)
    L = G[:1].copy()
    for g in G[1:]:
        cand = np.vstack([L, np.maximum(L, g), g[None, :]])
        if weights is not None:
            _, idx = np.unique(cand @ weights, return_index=True)
            L = cand[idx]
        else:
            L = np.unique(cand, axis=0)
        if len(L) > cap:
            raise LatticeCapExceeded(cap, len(L))
    return L


def lcm_lattice(I: MonomialIdeal, cap: int | None = None) -> MultidegreeLattice:
    """All lcms of nonempty subsets of the minimal generators, canonically ordered."""
    I.require_proper_nonzero()
    cap = default_cap() if cap is None else cap
    if len(I.gens) > cap:
        raise LatticeCapExceeded(cap, len(I.gens))
    L = _lattice_array(I.gens, cap)
    elems = sorted((tuple(int(x) for x in row) for row in L), key=canonical_key)
    return MultidegreeLattice(I, tuple(elems))


# --------------------------------------------------------------------------
# simplicial complexes and reduced homology


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of vertex subsets.

    ``faces`` holds sorted vertex tuples; ``()`` is the empty face.  A void
    complex has no faces at all.
    """

    vertices: tuple[int, ...]
    faces: frozenset[tuple[int, ...]] = field(default=frozenset())

    def __post_init__(self):
        verts = set(self.vertices)
        for f in self.faces:
            if not set(f) <= verts:
                raise ValueError(f"face {f} uses vertices outside {self.vertices}")
            for k in range(len(f)):
                for sub in combinations(f, k):
                    if sub not in self.faces:
                        raise ValueError(f"not downward closed: {sub} missing below {f}")

    @classmethod
    def from_facets(cls, vertices: Iterable[int], facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        faces = set()
        for fct in facets:
            fct = tuple(sorted(fct))
            for k in range(len(fct) + 1):
                faces.update(combinations(fct, k))
        return cls(tuple(vertices), frozenset(faces))

    def is_void(self) -> bool:
        return not self.faces

    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-2)


def _homology_of_faces(faces_by_size: dict[int, list[tuple]], top: int, fld: FieldSpec) -> list[int]:
    """Reduced homology dims in degrees -1..top-1 for faces grouped by cardinality."""
    index = {s: {f: j for j, f in enumerate(fs)} for s, fs in faces_by_size.items()}
    ranks = {}
    for s in range(1, top + 1):
        rows_faces = faces_by_size.get(s, [])
        cols = index.get(s - 1, {})
        if not rows_faces or not cols:
            ranks[s] = 0
            continue
        mat = []
        for f in rows_faces:
            row = [0] * len(cols)
            for pos in range(s):
                row[cols[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            mat.append(row)
        ranks[s] = rank(mat, fld)
    dims = []
    for s in range(0, top + 1):
        c = len(faces_by_size.get(s, []))
        dims.append(c - ranks.get(s, 0) - ranks.get(s + 1, 0))
    return dims


def reduced_homology_dims(C: SimplicialComplex, fld: FieldSpec = GF2) -> list[int]:
    """Reduced homology dimensions of ``C``; entry j is degree j-1 (starting at -1).

    The list covers degrees -1 .. len(vertices)-1.  The empty face sits in
    degree -1, so {()} gives [1, 0, ...] and a void complex gives all zeros.
    """
    top = len(C.vertices)
    if C.is_void():
        return [0] * (top + 1)
    by_size: dict[int, list[tuple]] = {}
    for f in sorted(C.faces):
        by_size.setdefault(len(f), []).append(f)
    return _homology_of_faces(by_size, top, fld)


@lru_cache(maxsize=65536)
def _homology_from_facet_masks(facets: frozenset[int], fld: FieldSpec) -> tuple[int, ...]:
    faces = set()
    for m in facets:
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    by_size: dict[int, list[tuple]] = {}
    for m in sorted(faces):
        verts = tuple(i for i in range(m.bit_length()) if m >> i & 1)
        by_size.setdefault(len(verts), []).append(verts)
    top = max(bin(m).count("1") for m in facets)
    return tuple(_homology_of_faces(by_size, top, fld))


def upper_koszul(I: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    b = check_monomial(b, I.arity)
    supp = support(b)
    faces = set()
    for k in range(len(supp) + 1):
        for tau in combinations(supp, k):
            e = list(b)
            for v in tau:
                e[v] -= 1
            if contains(I, tuple(e)):
                faces.add(tau)
    return SimplicialComplex(supp, frozenset(faces))


# --------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers, indexed for the ideal (not S/I).

    ``entries[(i, b)]`` is beta_{i,b}(I).  The quotient S/I has
    beta_{i+1,b}(S/I) = beta_{i,b}(I) plus beta_{0,0}(S/I) = 1.
    """

    arity: int
    entries: dict[tuple[int, Monomial], int]
    convention: str = "ideal"

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), d in self.entries.items():
            out[i] += d
        return out

    def beta(self, i: int) -> int:
        t = self.totals()
        return t[i] if 0 <= i < len(t) else 0

    def graded_totals(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, b), d in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + d
        return out

    def rows(self) -> list[tuple[int, Monomial, int]]:
        return sorted(((i, b, d) for (i, b), d in self.entries.items()), key=lambda r: (r[0], canonical_key(r[1])))

    def for_quotient(self) -> BettiTable:
        shifted = {(i + 1, b): d for (i, b), d in self.entries.items()}
        shifted[(0, (0,) * self.arity)] = 1
        return BettiTable(self.arity, shifted, "quotient")

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "entries": [{"i": i, "multidegree": list(b), "dim": d} for i, b, d in self.rows()],
        }


def _koszul_facets(gens: np.ndarray, B: np.ndarray):
    """Yield (b, supp mask, facet masks of K^b) for each row b of B."""
    n = gens.shape[1]
    pow2 = (1 << np.arange(n)).astype(np.int64)
    chunk = max(1, 4_000_000 // max(1, gens.shape[0]))
    for start in range(0, len(B), chunk):
        Bc = B[start:start + chunk]
        div = divisibility_matrix(gens, Bc)
        tight = np.zeros(div.shape, dtype=np.int64)
        for j in range(n):
            tight |= (gens[None, :, j] == Bc[:, None, j]) * pow2[j]
        supp = (Bc > 0) @ pow2
        facet = supp[:, None] & ~tight
        for r in range(len(Bc)):
            yield Bc[r], int(supp[r]), facet[r][div[r]]


def _maximal_masks(masks: set[int]) -> frozenset[int]:
    ms = sorted(masks, key=lambda m: -bin(m).count("1"))
    keep: list[int] = []
    for m in ms:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return frozenset(keep)


def _betti_with_lattice(I: MonomialIdeal, fld: FieldSpec, cap: int | None) -> tuple[BettiTable, int]:
    I.require_proper_nonzero()
    lattice = _lattice_array(I.gens, default_cap() if cap is None else cap)
    gens = np.array(I.gens, dtype=np.int64)
    entries: dict[tuple[int, Monomial], int] = {}
    for b, supp, facets in _koszul_facets(gens, lattice):
        if (facets == supp).any():
            continue  # full simplex on supp(b): acyclic
        dims = _homology_from_facet_masks(_maximal_masks(set(facets.tolist())), fld)
        bt = tuple(int(x) for x in b)
        for j, d in enumerate(dims):
            if d:
                entries[(j, bt)] = d  # reduced degree j-1 -> homological index j
    return BettiTable(I.arity, entries), len(lattice)


def betti_table(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int | None = None) -> BettiTable:
    return _betti_with_lattice(I, fld, cap)[0]


def betti_table_literal(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int | None = None) -> BettiTable:
    """Same table, built from explicit ``upper_koszul`` complexes (slow path)."""
    entries = {}
    for b in lcm_lattice(I, cap).elements:
        dims = reduced_homology_dims(upper_koszul(I, b), fld)
        for j, d in enumerate(dims):
            if d:
                entries[(j, b)] = d
    return BettiTable(I.arity, entries)


def projective_dimension(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int | None = None) -> int:
    return betti_table(I, fld, cap).pd


def depth_of_quotient(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int | None = None) -> int:
    """depth S/I = n - pd(S/I) = n - 1 - pd(I)."""
    I.require_proper_nonzero()
    return I.arity - 1 - projective_dimension(I, fld, cap)


# --------------------------------------------------------------------------
# socle test


def _unique_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) == 0:
        return arr
    weights = _encoder(arr)
    if weights is None:
        return np.unique(arr, axis=0)
    _, idx = np.unique(arr @ weights, return_index=True)
    return arr[idx]


def socle_nonzero(I: MonomialIdeal) -> bool:
    """True iff (I : m) strictly contains I, i.e. depth S/I = 0.

    Computes generators of (I : x_1) cap ... cap (I : x_n) while discarding
    any partial generator already in I: multiples of such an element stay in
    I, so they can never produce a socle witness.
    """
    I.require_proper_nonzero()
    G = np.array(I.gens, dtype=np.int64)
    n = G.shape[1]
    survivors = None
    # variables used by fewer generators first: smaller colon ideals early
    order = np.argsort((G > 0).sum(axis=0), kind="stable")
    for v in order:
        # minimal generators of (I : x_v) not in I are exactly g / x_v with g_v > 0
        colon_v = G[G[:, v] > 0].copy()
        colon_v[:, v] -= 1
        if survivors is None:
            survivors = colon_v
        else:
            step = max(1, 2_000_000 // max(1, len(colon_v) * n))
            parts = []
            for start in range(0, len(survivors), step):
                block = survivors[start:start + step]
                parts.append(_unique_rows(np.maximum(block[:, None, :], colon_v[None, :, :]).reshape(-1, n)))
            cands = _unique_rows(np.vstack(parts))
            cands = cands[~members_mask(cands, G)]
            survivors = cands[minimal_rows_mask(cands)] if len(cands) else cands
        if len(survivors) == 0:
            return False
    return True


def socle_monomials(I: MonomialIdeal) -> tuple[Monomial, ...]:
    """Minimal generators of (I : m) that are not in I."""
    from .monomial import colon_ideal, maximal_ideal

    return tuple(h for h in colon_ideal(I, maximal_ideal(I.ring)).gens if not contains(I, h))


# --------------------------------------------------------------------------
# depth of powers


@dataclass(frozen=True)
class DepthRow:
    k: int
    depth: int
    pd: int
    ngens: int
    nlattice: int | None  # None when the socle test settled depth 0


def depth_table(
    I: MonomialIdeal,
    k_max: int,
    fld: FieldSpec = GF2,
    cap: int | None = None,
    socle_shortcut: bool = True,
) -> list[DepthRow]:
    I.require_proper_nonzero()
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    cap = default_cap() if cap is None else cap
    n = I.arity
    rows = []
    for k, Ik in enumerate(powers(I, k_max), start=1):
        if socle_shortcut and socle_nonzero(Ik):
            rows.append(DepthRow(k, 0, n - 1, len(Ik.gens), None))
            continue
        table, size = _betti_with_lattice(Ik, fld, cap)
        rows.append(DepthRow(k, n - 1 - table.pd, table.pd, len(Ik.gens), size))
    return rows


def depth_prefix(I: MonomialIdeal, k_max: int, fld: FieldSpec = GF2, cap: int | None = None) -> list[int]:
    return [row.depth for row in depth_table(I, k_max, fld, cap)]


@dataclass(frozen=True)
class Stabilization:
    limit: int
    dstab: int
    certified: bool = False


def observed_limit_and_dstab(prefix: Sequence[int], window: int = 3) -> Stabilization | None:
    """Limit and dstab read off a finite prefix, or None when inconclusive.

    The prefix must end in a run of at least ``window`` equal values; dstab
    is the (1-based) start of that final run.  Never certified.
    """
    if not prefix:
        raise ValueError("empty depth prefix")
    if window < 1:
        raise ValueError("window must be positive")
    last = prefix[-1]
    start = len(prefix)
    while start > 0 and prefix[start - 1] == last:
        start -= 1
    if len(prefix) - start < window:
        return None
    return Stabilization(last, start + 1, False)
