"""Brute-force Betti numbers from the Taylor resolution.

Tensoring the Taylor resolution with the residue field kills every
differential entry lcm(T)/lcm(T - j) that is not 1.  What survives splits into
one small complex per multidegree b, spanned by the generator subsets T with
lcm(T) = b, and its homology is the minimal Betti numbers at b.  Exponential
in the number of generators; used to cross-check the lattice engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable
from .errors import CertificateError, OracleCapExceeded
from .linalg import GF2, FieldSpec, rank
from .monomial import Monomial, MonomialIdeal, canonical_key, lcm

DEFAULT_GENERATOR_CAP = 16


@dataclass(frozen=True)
class TaylorComplexSlice:
    """The b-graded strand: ``bases[i]`` lists subsets (bitmasks) of size i+1."""

    multidegree: Monomial
    bases: dict[int, list[int]]
    boundaries: dict[int, list[list[int]]]  # i -> matrix of C_i -> C_{i-1}, rows indexed by C_i


def _subset_lcms(gens: tuple[Monomial, ...]) -> list[Monomial | None]:
    out: list[Monomial | None] = [None] * (1 << len(gens))
    for mask in range(1, 1 << len(gens)):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        out[mask] = gens[low] if rest == 0 else lcm(out[rest], gens[low])
    return out


def taylor_slices(I: MonomialIdeal, cap: int = DEFAULT_GENERATOR_CAP) -> list[TaylorComplexSlice]:
    I.require_proper_nonzero()
    s = len(I.gens)
    if s > cap:
        raise OracleCapExceeded(f"Taylor oracle limited to {cap} generators, ideal has {s}")
    lcms = _subset_lcms(I.gens)
    strands: dict[Monomial, dict[int, list[int]]] = {}
    for mask in range(1, 1 << s):
        strands.setdefault(lcms[mask], {}).setdefault(bin(mask).count("1") - 1, []).append(mask)
    slices = []
    for b in sorted(strands, key=canonical_key):
        bases = strands[b]
        boundaries = {}
        for i, basis in bases.items():
            if i == 0 or i - 1 not in bases:
                continue
            col = {T: j for j, T in enumerate(bases[i - 1])}
            mat = []
            for T in basis:
                row = [0] * len(col)
                members = [j for j in range(s) if T >> j & 1]
                for pos, j in enumerate(members):
                    face = T & ~(1 << j)
                    if face in col:  # same strand iff lcm unchanged
                        row[col[face]] = -1 if pos % 2 else 1
                mat.append(row)
            boundaries[i] = mat
        slices.append(TaylorComplexSlice(b, bases, boundaries))
    return slices


def _check_boundary_squared(sl: TaylorComplexSlice) -> None:
    for i, upper in sl.boundaries.items():
        lower = sl.boundaries.get(i - 1)
        if lower is None:
            continue
        for row in upper:
            for c in range(len(lower[0])):
                if sum(row[k] * lower[k][c] for k in range(len(lower))):
                    raise CertificateError(f"boundary squared is nonzero in strand {sl.multidegree}")


def taylor_betti(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int = DEFAULT_GENERATOR_CAP) -> BettiTable:
    entries: dict[tuple[int, Monomial], int] = {}
    for sl in taylor_slices(I, cap):
        _check_boundary_squared(sl)
        ranks = {i: rank(m, fld) for i, m in sl.boundaries.items()}
        for i, basis in sl.bases.items():
            d = len(basis) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if d:
                entries[(i, sl.multidegree)] = d
    return BettiTable(I.arity, entries)


@dataclass(frozen=True)
class CrossCheck:
    ok: bool
    first_difference: tuple[int, Monomial, int, int] | None = None  # (i, b, engine, oracle)


def cross_check(I: MonomialIdeal, fld: FieldSpec = GF2, cap: int = DEFAULT_GENERATOR_CAP) -> CrossCheck:
    from .betti import betti_table

    engine = betti_table(I, fld).entries
    oracle = taylor_betti(I, fld, cap).entries
    keys = sorted(set(engine) | set(oracle), key=lambda k: (k[0], canonical_key(k[1])))
    for key in keys:
        a, b = engine.get(key, 0), oracle.get(key, 0)
        if a != b:
            return CrossCheck(False, (key[0], key[1], a, b))
    return CrossCheck(True)
