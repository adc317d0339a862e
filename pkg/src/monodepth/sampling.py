"""Seeded random inputs for oracle runs and property checks.

All draws go through ``random.Random(seed)``, so a seed fixes the corpus.

Random ideals: arity uniform in 1..max_arity, generator count uniform in
1..max_gens, every exponent uniform in 0..max_exp.  The all-zero exponent row
(the unit monomial) is redrawn so that every ideal is proper and nonzero.
"""

from __future__ import annotations

import random

from .monomial import MonomialIdeal, Ring


def random_monomial(rng: random.Random, arity: int, max_exp: int, allow_one: bool = True) -> tuple[int, ...]:
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(arity))
        if allow_one or any(m):
            return m


def random_ideal(
    rng: random.Random,
    max_arity: int = 4,
    max_gens: int = 6,
    max_exp: int = 4,
    arity: int | None = None,
) -> MonomialIdeal:
    n = arity if arity is not None else rng.randint(1, max_arity)
    count = rng.randint(1, max_gens)
    gens = tuple(random_monomial(rng, n, max_exp, allow_one=False) for _ in range(count))
    return MonomialIdeal(Ring.standard(n), gens)


def random_corpus(seed: int, count: int, **kwargs) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng, **kwargs) for _ in range(count)]
