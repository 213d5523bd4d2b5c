"""Closed-form weights of sums of two and three equal-degree monomials.

The two-monomial count follows from inclusion-exclusion in any (n, d). The
three-monomial closed form is only stated for degree 5 in 10 variables and is
kept to that domain; everything else goes through :func:`oracle_weight`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .boolfn import Anf, Monomial, anf_to_table


@dataclass(frozen=True)
class IntersectionProfile:
    """Pairwise and triple intersection sizes of three degree-d supports I, J, K."""

    c1: int  # |I & J|
    c2: int  # |I & K|
    c3: int  # |J & K|
    c4: int  # |I & J & K|
    d: int
    n: int

    def __post_init__(self):
        c1, c2, c3, c4, d = self.c1, self.c2, self.c3, self.c4, self.d
        if min(c1, c2, c3, c4) < 0:
            raise ValueError(f"negative intersection size in {self}")
        if not c4 <= min(c1, c2, c3) or max(c1, c2, c3) > d:
            raise ValueError(f"inconsistent intersection sizes in {self}")
        # each support must hold its two pairwise overlaps
        if c1 + c2 - c4 > d or c1 + c3 - c4 > d or c2 + c3 - c4 > d:
            raise ValueError(f"overlaps exceed degree {d} in {self}")
        if self.union_size > self.n:
            raise ValueError(f"union of supports needs {self.union_size} > {self.n} variables")

    @property
    def union_size(self) -> int:
        return 3 * self.d - self.c1 - self.c2 - self.c3 + self.c4

    def as_tuple(self) -> tuple:
        return (self.c1, self.c2, self.c3, self.c4)


def _support(m) -> frozenset:
    return m.vars if isinstance(m, Monomial) else frozenset(m)


def profile_of(i_set, j_set, k_set, n: Optional[int] = None) -> IntersectionProfile:
    I, J, K = (_support(s) for s in (i_set, j_set, k_set))
    if not len(I) == len(J) == len(K):
        raise ValueError(f"supports have different degrees: {len(I)}, {len(J)}, {len(K)}")
    if n is None:
        ns = {s.n for s in (i_set, j_set, k_set) if isinstance(s, Monomial)}
        if len(ns) > 1:
            raise ValueError(f"supports live in different variable counts {sorted(ns)}")
        n = ns.pop() if ns else max(I | J | K, default=0)
    return IntersectionProfile(len(I & J), len(I & K), len(J & K), len(I & J & K), len(I), n)


def two_monomial_weight(n: int, d: int, c: int) -> int:
    """Weight of the sum of two degree-d monomials sharing c variables, in n variables."""
    if not 0 <= c <= d or 2 * d - c > n:
        raise ValueError(f"no two degree-{d} monomials in {n} variables share {c} variables")
    return 2 ** (n - d + 1) - 2 ** (n - 2 * d + c + 1)


def two_monomial_weight_set(n: int, d: int) -> set:
    if 2 * d > n:
        raise ValueError(f"need 2d <= n, got d={d}, n={n}")
    return {two_monomial_weight(n, d, c) for c in range(max(0, 2 * d - n), d + 1)}


def three_monomial_weight(p: IntersectionProfile) -> int:
    if (p.n, p.d) != (10, 5):
        raise ValueError(f"closed form only covers degree 5 in 10 variables, got d={p.d}, n={p.n}")
    c1, c2, c3, c4 = p.as_tuple()
    return 2 ** (c1 + c2 + c3 - c4 - 3) - 2 ** (c1 + 1) - 2 ** (c2 + 1) - 2 ** (c3 + 1) + 96


def realizable_profiles(n: int = 10, d: int = 5) -> list:
    """Every profile that some triple of d-subsets of [1, n] attains."""
    out = []
    for c1, c2, c3 in itertools.product(range(d + 1), repeat=3):
        for c4 in range(min(c1, c2, c3) + 1):
            try:
                out.append(IntersectionProfile(c1, c2, c3, c4, d, n))
            except ValueError:
                pass
    return out


def three_monomial_weight_set() -> set:
    return {three_monomial_weight(p) for p in realizable_profiles(10, 5)}


def oracle_weight(f: Anf) -> int:
    """Brute-force weight: evaluate the full truth table and count ones."""
    return anf_to_table(f, method="terms").weight


def degree_d_supports(n: int, d: int) -> list:
    return [frozenset(c) for c in itertools.combinations(range(1, n + 1), d)]


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    mismatches: int = 0
    examples: list = None

    def __post_init__(self):
        if self.examples is None:
            self.examples = []

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.mismatches == 0

    def record(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            self.mismatches += 1
            if len(self.examples) < 20:
                self.examples.append(detail)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "matches": self.cases - self.mismatches,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "mismatch_examples": self.examples,
        }


def check_two_monomial(n: int = 10, d: int = 5) -> CheckReport:
    """Closed form against the oracle on every ordered pair of degree-d monomials."""
    report = CheckReport(f"two-monomial n={n} d={d}")
    supports = degree_d_supports(n, d)
    for I, J in itertools.product(supports, repeat=2):
        expected = two_monomial_weight(n, d, len(I & J))
        got = oracle_weight(Anf([I, J], n))
        report.record(expected == got, {"I": sorted(I), "J": sorted(J), "formula": expected, "oracle": got})
    return report


def check_three_monomial(fixed: Iterable[int] = (1, 2, 3, 4, 5)) -> CheckReport:
    """Closed form against the oracle for I fixed and every ordered (J, K).

    Mismatches are reported, never patched; the oracle value is the truth.
    """
    n, d = 10, 5
    I = frozenset(fixed)
    report = CheckReport("three-monomial n=10 d=5")
    for J, K in itertools.product(degree_d_supports(n, d), repeat=2):
        p = profile_of(I, J, K, n)
        expected = three_monomial_weight(p)
        got = oracle_weight(Anf([I, J, K], n))
        report.record(
            expected == got,
            {"J": sorted(J), "K": sorted(K), "profile": p.as_tuple(), "formula": expected, "oracle": got},
        )
    return report
