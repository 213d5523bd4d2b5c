"""Seeded randomized search for a low-degree function of a given weight."""
from __future__ import annotations

import itertools
import random
from typing import Optional

from .boolfn import Anf, TruthTable, monomial_table, table_to_anf

_POLISH_ROUNDS = 40
_POLISH_SAMPLE = 24


def weight_impossible(target: int, r: int, n: int) -> Optional[str]:
    """A reason why no degree <= r function of n variables has this weight, or None."""
    top = 1 << n
    if not 0 <= target <= top:
        return f"weight must lie in [0, {top}]"
    if r >= n or target in (0, top):
        return None
    if r < 0:
        return "only the zero function has negative degree"
    if r == 0:
        return "constant functions have weight 0 or 2^n"
    if target % 2:
        return "odd weights need degree n"
    dmin = 1 << (n - r)
    if target < dmin or target > top - dmin:
        return f"nonzero weights of degree <= {r} lie in [{dmin}, {top - dmin}]"
    div = 1 << ((n - 1) // r)
    if target % div:
        return f"weights of degree <= {r} are multiples of {div}"
    return None


def _monomials(k: int, d: int) -> list:
    return [monomial_table(frozenset(c), k) for c in itertools.combinations(range(1, k + 1), d)]


class _BlockSampler:
    """Random sparse functions of the form g0 || g1 || g2 || (g1 + g2 + g3).

    g1, g2 use degree r-1 monomials and g0, g3 degree r-2 ones in n-2
    variables, which keeps the whole function at degree <= r.
    """

    def __init__(self, n: int, r: int, rng: random.Random):
        self.k = n - 2
        self.size = 1 << self.k
        self.rng = rng
        self.mid = _monomials(self.k, r - 1)
        self.low = _monomials(self.k, r - 2)
        self.by_degree = [_monomials(self.k, d) for d in range(0, r)]

    def sample(self) -> list:
        rng = self.rng
        s = [0, 0, 0, 0]
        for _ in range(rng.randint(1, 3)):
            s[1] ^= rng.choice(self.mid)
        for _ in range(rng.randint(1, 3)):
            s[2] ^= rng.choice(self.mid)
        if rng.random() < 0.5:
            for _ in range(rng.randint(1, 2)):
                s[0] ^= rng.choice(self.low)
        if rng.random() < 0.25:
            s[3] ^= rng.choice(self.low)
        return s

    def neighbour(self, s: list) -> list:
        s = list(s)
        j = self.rng.randrange(4)
        top = len(self.by_degree) - (1 if j in (1, 2) else 2)
        s[j] ^= self.rng.choice(self.by_degree[self.rng.randint(0, top)])
        return s

    @staticmethod
    def weight(s: list) -> int:
        g0, g1, g2, g3 = s
        return g0.bit_count() + g1.bit_count() + g2.bit_count() + (g1 ^ g2 ^ g3).bit_count()

    def table(self, s: list) -> int:
        g0, g1, g2, g3 = s
        B = self.size
        return g0 | g1 << B | g2 << (2 * B) | (g1 ^ g2 ^ g3) << (3 * B)


class _FlatSampler:
    """Sparse sums of degree-r monomials in all n variables."""

    def __init__(self, n: int, r: int, rng: random.Random):
        self.rng = rng
        self.top = _monomials(n, r)
        self.by_degree = [_monomials(n, d) for d in range(1, r + 1)]

    def sample(self) -> int:
        f = 0
        for _ in range(self.rng.randint(1, 3)):
            f ^= self.rng.choice(self.top)
        return f

    def neighbour(self, f: int) -> int:
        # uniform degree: low degrees make big weight jumps, high degrees fine ones
        return f ^ self.rng.choice(self.rng.choice(self.by_degree))

    @staticmethod
    def weight(f: int) -> int:
        return f.bit_count()

    @staticmethod
    def table(f: int) -> int:
        return f


class _DenseSampler:
    """Uniform-ish random functions of degree <= r; weights cluster near 2^(n-1)."""

    def __init__(self, n: int, r: int, rng: random.Random):
        self.rng = rng
        self.by_degree = [_monomials(n, d) for d in range(1, r + 1)]
        self.all = [t for ts in self.by_degree for t in ts]

    def sample(self) -> int:
        f = 0
        for t in self.all:
            if self.rng.random() < 0.5:
                f ^= t
        return f

    neighbour = _FlatSampler.neighbour

    weight = staticmethod(_FlatSampler.weight)
    table = staticmethod(_FlatSampler.table)


def find_witness(target_weight: int, r: int, n: int, budget: int = 200_000, seed: int = 0) -> Optional[Anf]:
    """Search for f with deg(f) <= r and wt(f) = target_weight; None if not found.

    Each restart draws a sparse random ANF (mostly in four-block shape,
    sometimes flat) and polishes it by greedy single-term toggles.
    ``budget`` caps the number of weight evaluations; weights ruled out by
    parity, minimum distance or divisibility return None without searching.
    """
    if n > 12:
        raise ValueError("search is limited to n <= 12")
    if weight_impossible(target_weight, r, n) is not None:
        return None
    top = 1 << n
    if target_weight == 0:
        return Anf.zero(n)
    if target_weight == top:
        return Anf.one(n)
    if r >= n:
        return table_to_anf(TruthTable(n, (1 << target_weight) - 1))

    # search the lower half; complementing keeps the degree
    flip = target_weight > top // 2
    goal = top - target_weight if flip else target_weight
    if goal == 1 << (n - r):
        f = Anf([range(1, r + 1)], n)
        return f + 1 if flip else f
    rng = random.Random(seed)
    sparse = [_FlatSampler(n, r, rng)]
    if r >= 2 and n - 2 >= r - 1:
        sparse.append(_BlockSampler(n, r, rng))
    dense = _DenseSampler(n, r, rng)
    # far from the minimum weight, dense random starts land closer
    p_dense = 0.6 if goal >= top // 4 else 0.0
    evals = 0
    while evals < budget:
        u = rng.random()
        if u < p_dense:
            sampler = dense
        else:
            sampler = sparse[-1] if rng.random() < 0.75 else sparse[0]
        s = sampler.sample()
        evals += 1
        gap = abs(sampler.weight(s) - goal)
        rounds = _POLISH_ROUNDS
        while gap and rounds and evals < budget:
            rounds -= 1
            best, best_gap = None, gap
            for _ in range(_POLISH_SAMPLE):
                c = sampler.neighbour(s)
                evals += 1
                d = abs(sampler.weight(c) - goal)
                if d < best_gap:
                    best, best_gap = c, d
            if best is None:
                break
            s, gap = best, best_gap
        if gap == 0:
            bits = sampler.table(s)
            if flip:
                bits ^= (1 << top) - 1
            f = table_to_anf(TruthTable(n, bits))
            assert f.degree <= r
            return f
    return None
