"""Buchberger graphs and the two-term resolution of powers of prop_ideal(t).

For I = (x^t, x y^(t-2) z, y^(t-1) z) and n <= t - 1 the generators of I^n are
w(a, b, c) with a + b + c = n.  Ordered lexicographically by (a, b), each
consecutive pair is an edge of the Buchberger graph, every other pair's
syzygy telescopes through consecutive ones, and so the consecutive syzygies
alone generate syz(I^n).  The checks here evaluate each of those steps.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .constructions import grid_monomial, prop_ideal
from .errors import CertificateError
from .monomial import Monomial, MonomialIdeal, lcm, mul, power, quotient

Label = tuple[int, int, int]


@dataclass(frozen=True)
class PowerGrid:
    t: int
    n: int
    labels: tuple[Label, ...]  # descending lex order on (a, b)
    monomials: tuple[Monomial, ...]
    matches_generators: bool  # labels biject onto the minimal generators of I^n

    @property
    def within_hypothesis(self) -> bool:
        return 1 <= self.n <= self.t - 1

    def w(self, label: Label) -> Monomial:
        return grid_monomial(self.t, *label)

    def position(self, label: Label) -> int:
        return self.labels.index(label)


def power_grid(t: int, n: int) -> PowerGrid:
    if t < 2 or n < 1:
        raise ValueError(f"power grid needs t >= 2 and n >= 1, got t={t}, n={n}")
    labels = tuple((a, b, n - a - b) for a in range(n, -1, -1) for b in range(n - a, -1, -1))
    monos = tuple(grid_monomial(t, *lab) for lab in labels)
    gens = power(prop_ideal(t), n).gens
    matches = len(set(monos)) == len(monos) and set(monos) == set(gens)
    return PowerGrid(t, n, labels, monos, matches)


@dataclass(frozen=True)
class CoverPair:
    upper: Label
    lower: Label
    kind: str  # "step", "jump", or "other" (outside the expected shapes)


def lessdot_pairs(grid: PowerGrid) -> list[CoverPair]:
    n = grid.n
    pairs = []
    for (a, b, c), low in zip(grid.labels, grid.labels[1:]):
        if low == (a, b - 1, c + 1):
            kind = "step"
        elif (b, c) == (0, n - a) and low == (a - 1, n - a + 1, 0):
            kind = "jump"
        else:
            kind = "other"
        pairs.append(CoverPair((a, b, c), low, kind))
    return pairs


@dataclass(frozen=True)
class BuchbergerGraph:
    ideal: MonomialIdeal
    edges: frozenset[tuple[int, int]]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def edge_list(self) -> list[tuple[Monomial, Monomial]]:
        return [(self.ideal.gens[i], self.ideal.gens[j]) for i, j in sorted(self.edges)]


def _strictly_below_on_support(m: Monomial, L: Monomial) -> bool:
    """m | L with deg_v m < deg_v L for every v in supp(L)."""
    return all(a < b if b else a == 0 for a, b in zip(m, L))


def buchberger_graph(I: MonomialIdeal) -> BuchbergerGraph:
    """Edge {i, j} unless some third generator divides lcm(m_i, m_j) strictly in every variable of its support."""
    gens = I.gens
    edges = set()
    for i, j in combinations(range(len(gens)), 2):
        L = lcm(gens[i], gens[j])
        if not any(_strictly_below_on_support(gens[k], L) for k in range(len(gens)) if k not in (i, j)):
            edges.add((i, j))
    return BuchbergerGraph(I, frozenset(edges))


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    checked: int
    outside_hypothesis: bool = False
    failure: str | None = None

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        note = " (outside n <= t-1)" if self.outside_hypothesis else ""
        tail = f": {self.failure}" if self.failure else ""
        return f"{self.name}\t{status}\t{self.checked} checked{note}{tail}"


def observation_check(t: int, n: int) -> CheckReport:
    """Along the lex order, deg_x strictly follows it and deg_y, deg_z run against it."""
    grid = power_grid(t, n)
    checked = 0
    for p in grid.labels:
        for q in grid.labels:
            if p == q:
                continue
            checked += 1
            wp, wq = grid.w(p), grid.w(q)
            q_below = (q[0], q[1]) < (p[0], p[1])
            problem = None
            if (wq[0] < wp[0]) != q_below:
                problem = "deg_x does not match the order"
            elif q_below and wq[1] < wp[1]:
                problem = "deg_y decreases going down"
            elif q_below and wq[2] < wp[2]:
                problem = "deg_z decreases going down"
            if problem:
                return CheckReport("observation", False, checked, not grid.within_hypothesis, f"w{q} vs w{p}: {problem}")
    return CheckReport("observation", True, checked, not grid.within_hypothesis)


def claim1_check(t: int, n: int) -> CheckReport:
    """Every covering pair is a Buchberger edge, and no w(.) divides lcm/xyz."""
    grid = power_grid(t, n)
    In = power(prop_ideal(t), n)
    graph = buchberger_graph(In)
    index = {g: i for i, g in enumerate(In.gens)}
    checked = 0
    for pair in lessdot_pairs(grid):
        checked += 1
        wu, wl = grid.w(pair.upper), grid.w(pair.lower)
        if wu not in index or wl not in index:
            return CheckReport("claim1", False, checked, not grid.within_hypothesis,
                               f"w{pair.upper} or w{pair.lower} is not a minimal generator")
        if not graph.has_edge(index[wu], index[wl]):
            return CheckReport("claim1", False, checked, not grid.within_hypothesis,
                               f"w{pair.lower} < w{pair.upper} is not a Buchberger edge")
        L = lcm(wu, wl)
        reduced = tuple(e - 1 for e in L)  # lcm / xyz; a negative entry means nothing divides it
        blocker = next((lab for lab, w in zip(grid.labels, grid.monomials)
                        if all(a <= b for a, b in zip(w, reduced))), None)
        if blocker is not None:
            return CheckReport("claim1", False, checked, not grid.within_hypothesis,
                               f"w{blocker} divides lcm(w{pair.upper}, w{pair.lower})/xyz")
    return CheckReport("claim1", True, checked, not grid.within_hypothesis)


# --------------------------------------------------------------------------
# syzygies


@dataclass(frozen=True)
class Syzygy:
    """sigma = (L/m_upper) e_upper - (L/m_lower) e_lower with L = lcm(m_upper, m_lower)."""

    upper: Label
    lower: Label
    m_upper: Monomial
    m_lower: Monomial
    coeff_upper: Monomial
    coeff_lower: Monomial

    @classmethod
    def of(cls, upper: Label, lower: Label, m_upper: Monomial, m_lower: Monomial) -> Syzygy:
        L = lcm(m_upper, m_lower)
        return cls(upper, lower, m_upper, m_lower, quotient(L, m_upper), quotient(L, m_lower))

    def presentation_vanishes(self) -> bool:
        return mul(self.coeff_upper, self.m_upper) == mul(self.coeff_lower, self.m_lower)

    def as_vector(self, scale: Monomial | None = None) -> Counter:
        """Free-module element as {(label, monomial coefficient): integer}."""
        s = scale or (0,) * len(self.m_upper)
        vec = Counter()
        vec[(self.upper, mul(s, self.coeff_upper))] += 1
        vec[(self.lower, mul(s, self.coeff_lower))] -= 1
        return vec


def sigma_set(grid: PowerGrid) -> list[Syzygy]:
    return [Syzygy.of(p.upper, p.lower, grid.w(p.upper), grid.w(p.lower)) for p in lessdot_pairs(grid)]


@dataclass(frozen=True)
class TelescopeCertificate:
    chain: tuple[Label, ...]
    quotients: tuple[Monomial, ...]  # lcm(w_1, w_s) / lcm(w_i, w_{i+1})
    identity_holds: bool


def claim2_decompose(grid: PowerGrid, upper: Label, lower: Label) -> TelescopeCertificate:
    """Write sigma(upper, lower) as a monomial combination of consecutive syzygies."""
    i, j = grid.position(upper), grid.position(lower)
    if j <= i:
        raise ValueError(f"w{lower} is not below w{upper}")
    if j == i + 1:
        raise ValueError(f"w{lower} is covered by w{upper}; nothing to decompose")
    chain = grid.labels[i:j + 1]
    L = lcm(grid.w(upper), grid.w(lower))
    quotients = []
    total = Counter()
    for a, b in zip(chain, chain[1:]):
        Lab = lcm(grid.w(a), grid.w(b))
        q = tuple(x - y for x, y in zip(L, Lab))
        if any(e < 0 for e in q):
            raise CertificateError(f"lcm(w{upper}, w{lower}) / lcm(w{a}, w{b}) = {q} is not a monomial")
        quotients.append(q)
        total.update(Syzygy.of(a, b, grid.w(a), grid.w(b)).as_vector(q))
    total = Counter({k: v for k, v in total.items() if v})
    target = Syzygy.of(upper, lower, grid.w(upper), grid.w(lower)).as_vector()
    return TelescopeCertificate(tuple(chain), tuple(quotients), total == target)


def claim2_check(t: int, n: int) -> CheckReport:
    grid = power_grid(t, n)
    checked = 0
    for i, j in combinations(range(len(grid.labels)), 2):
        if j == i + 1:
            continue
        checked += 1
        try:
            cert = claim2_decompose(grid, grid.labels[i], grid.labels[j])
        except CertificateError as exc:
            return CheckReport("claim2", False, checked, not grid.within_hypothesis, str(exc))
        if not cert.identity_holds:
            return CheckReport("claim2", False, checked, not grid.within_hypothesis,
                               f"telescoping sum fails for w{grid.labels[i]}, w{grid.labels[j]}")
    return CheckReport("claim2", True, checked, not grid.within_hypothesis)


def resolution_check(t: int, n: int, fld=None) -> CheckReport:
    """|Sigma| = beta_1(I^n), beta_i = 0 for i >= 2, all generators of degree n t."""
    from .betti import betti_table
    from .linalg import GF2

    grid = power_grid(t, n)
    In = power(prop_ideal(t), n)
    table = betti_table(In, fld or GF2)
    sigma = sigma_set(grid)
    outside = not grid.within_hypothesis
    bad = next((s for s in sigma if not s.presentation_vanishes()), None)
    if bad is not None:
        return CheckReport("resolution", False, len(sigma), outside, f"sigma(w{bad.upper}, w{bad.lower}) is not a syzygy")
    if table.beta(1) != len(sigma):
        return CheckReport("resolution", False, len(sigma), outside, f"|Sigma| = {len(sigma)} but beta_1 = {table.beta(1)}")
    if table.pd > 1:
        return CheckReport("resolution", False, len(sigma), outside, f"pd I^n = {table.pd} > 1")
    degrees = {sum(b) for (i, b) in table.entries if i == 0}
    if degrees != {n * t}:
        return CheckReport("resolution", False, len(sigma), outside, f"generator degrees {sorted(degrees)} != {{{n * t}}}")
    return CheckReport("resolution", True, len(sigma), outside)


def all_checks(t: int, n: int) -> list[CheckReport]:
    return [observation_check(t, n), claim1_check(t, n), claim2_check(t, n), resolution_check(t, n)]
