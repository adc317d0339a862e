"""Exact ranks of small integer matrices over GF(p) and over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime ``p``, or the rationals when ``p`` is None."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(None)
        if t.startswith("gf"):
            t = t[2:]
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"unknown field {text!r} (expected gf<p> or q)") from None

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


def rank_gf2_bits(rows: Sequence[int]) -> int:
    """Rank over GF(2) of a matrix whose rows are given as bitmasks."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_rational(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    rows = [list(map(int, row)) for row in matrix]
    if not rows:
        return 0
    m, ncols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = None
        for i in range(rank, m):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        for i in range(rank + 1, m):
            a = rows[i][c]
            # Bareiss step: exact division by the previous pivot
            rows[i] = [(pv * rows[i][j] - a * rows[rank][j]) // prev for j in range(ncols)]
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def rank(matrix: Sequence[Sequence[int]], field: FieldSpec) -> int:
    if not matrix or not matrix[0]:
        return 0
    if field.p is None:
        return rank_rational(matrix)
    if field.p == 2:
        bits = []
        for row in matrix:
            b = 0
            for j, x in enumerate(row):
                if x & 1:
                    b |= 1 << j
            bits.append(b)
        return rank_gf2_bits(bits)
    return rank_mod_p(matrix, field.p)
