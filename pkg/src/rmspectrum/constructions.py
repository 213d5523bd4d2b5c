"""Four-block concatenations and the explicit codewords built from them.

Every construction here has the shape ``g0 || g1 || g2 || (g1 + g2 + g3)``
over two extra variables. With deg(g0), deg(g3) <= r - 2 and
deg(g1), deg(g2) <= r - 1 the result has degree <= r, because the ANF is

    (x+1)(y+1) g0 + x g1 + y g2 + x y g3

where x, y are the two new variables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional, Sequence, Union

from .boolfn import Anf, Monomial, TruthTable, anf_to_table, concat4, parse_anf, weight
from .formulas import profile_of, three_monomial_weight, two_monomial_weight

AnfLike = Union[Anf, Iterable]


def _as_anf(g: AnfLike, n: int) -> Anf:
    if isinstance(g, Anf):
        if g.n != n:
            raise ValueError(f"expected a function of {n} variables, got {g.n}")
        return g
    if isinstance(g, str):
        return parse_anf(g, n)
    return Anf(g, n)


def _check_support(s, n: int, d: int) -> frozenset:
    vs = s.vars if isinstance(s, Monomial) else frozenset(s)
    if len(vs) != d or not all(1 <= v <= n for v in vs):
        raise ValueError(f"expected {d} distinct indices in [1, {n}], got {sorted(vs)}")
    return vs


def lemma1_concat(g0: Anf, g1: Anf, g2: Anf, g3: Anf, r: int = 6) -> Anf:
    """Return ``g0 || g1 || g2 || (g1 + g2 + g3)`` as an ANF in n + 2 variables.

    Requires deg(g0), deg(g3) <= r - 2 and deg(g1), deg(g2) <= r - 1; the
    result then has degree <= r.
    """
    n = g0.n
    for g in (g1, g2, g3):
        if g.n != n:
            raise ValueError("all four blocks must share the variable count")
    for label, g, bound in (("g0", g0, r - 2), ("g1", g1, r - 1), ("g2", g2, r - 1), ("g3", g3, r - 2)):
        if g.degree > bound:
            raise ValueError(f"{label} has degree {g.degree} > {bound}")
    N = n + 2
    x = Anf([[n + 1]], N)
    y = Anf([[n + 2]], N)
    g = (x + 1) * (y + 1) * g0.lift(N) + x * g1.lift(N) + y * g2.lift(N) + x * y * g3.lift(N)
    assert g.degree <= r, f"degree {g.degree} exceeds {r}"
    return g


def four_block_table(g0, g1, g2, g3) -> TruthTable:
    """Table of ``g0 || g1 || g2 || (g1 + g2 + g3)`` assembled block by block."""
    t0, t1, t2, t3 = (anf_to_table(g) if isinstance(g, Anf) else g for g in (g0, g1, g2, g3))
    return concat4(t0, t1, t2, t1 ^ t2 ^ t3)


def flipped_concat(g1: AnfLike, g2: AnfLike, a1: int = 0, a2: int = 0, a3: int = 0,
                   n: int = 10, r: Optional[int] = None) -> Anf:
    """``0 || (g1 + a1) || (g2 + a2) || (g1 + g2 + a3)``.

    The constant a1 + a2 + a3 plays the role of g3, so any flips stay inside
    the degree bound.
    """
    g1, g2 = _as_anf(g1, n), _as_anf(g2, n)
    if r is None:
        r = max(g1.degree, g2.degree, 1) + 1
    const = (a1 + a2 + a3) & 1
    return lemma1_concat(Anf.zero(n), g1 + a1, g2 + a2, Anf.one(n) if const else Anf.zero(n), r=r)


def flipped_weight(w1: int, w2: int, w12: int, n: int, a1: int = 0, a2: int = 0, a3: int = 0) -> int:
    """Weight of the flipped concatenation from the three unflipped block weights."""
    N = 1 << n
    return (N - w1 if a1 else w1) + (N - w2 if a2 else w2) + (N - w12 if a3 else w12)


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of one codeword from the shared-monomial constructions.

    ``kind`` is "construction1" (monomials = A, B, C; g1 = X+A+B, g2 = X+A+C,
    n = 10) or "construction2" (monomials = M1..M4; g1 = X+M1+M2,
    g2 = X+M3+M4, n = 2m). X is x_1 ... x_m in both cases.
    """

    kind: str
    base_m: int
    monomials: tuple
    flips: tuple = (0, 0, 0)

    def __post_init__(self):
        if self.kind == "construction1":
            if self.base_m != 5 or len(self.monomials) != 3:
                raise ValueError("construction1 takes three quintic supports over 10 variables")
        elif self.kind == "construction2":
            if self.base_m < 2 or len(self.monomials) != 4:
                raise ValueError("construction2 takes four supports and m >= 2")
        else:
            raise ValueError(f"unknown construction kind {self.kind!r}")
        n, d = 2 * self.base_m, self.base_m
        object.__setattr__(self, "monomials", tuple(_check_support(s, n, d) for s in self.monomials))
        flips = tuple(int(a) & 1 for a in self.flips)
        if len(flips) == 2:
            # construction2 flips the first and last blocks only
            flips = (flips[0], 0, flips[1])
        if len(flips) != 3:
            raise ValueError(f"expected two or three flip bits, got {self.flips}")
        object.__setattr__(self, "flips", flips)

    @property
    def n(self) -> int:
        return 2 * self.base_m

    def halves(self) -> tuple:
        """The pair (g1, g2) of unflipped middle blocks."""
        X = frozenset(range(1, self.base_m + 1))
        if self.kind == "construction1":
            A, B, C = self.monomials
            return Anf([X, A, B], self.n), Anf([X, A, C], self.n)
        M1, M2, M3, M4 = self.monomials
        return Anf([X, M1, M2], self.n), Anf([X, M3, M4], self.n)

    def build(self) -> Anf:
        g1, g2 = self.halves()
        return flipped_concat(g1, g2, *self.flips, n=self.n, r=self.base_m + 1)

    def block_weights(self) -> tuple:
        """(wt g1, wt g2, wt g1+g2) before flips, via closed forms when available."""
        if self.kind == "construction1":
            X = frozenset(range(1, 6))
            A, B, C = self.monomials
            w1 = three_monomial_weight(profile_of(X, A, B, 10))
            w2 = three_monomial_weight(profile_of(X, A, C, 10))
            return w1, w2, two_monomial_weight(10, 5, len(B & C))
        g1, g2 = self.halves()
        return weight(g1), weight(g2), weight(g1 + g2)

    def weight(self) -> int:
        return flipped_weight(*self.block_weights(), self.n, *self.flips)

    def to_dict(self) -> dict:
        g1, g2 = self.halves()
        return {
            "kind": self.kind,
            "m": self.base_m,
            "monomials": [sorted(s) for s in self.monomials],
            "flips": list(self.flips) if self.kind == "construction1" else [self.flips[0], self.flips[2]],
            "g1": str(g1),
            "g2": str(g2),
            "weight": self.weight(),
        }


def construction1(A, B, C) -> Anf:
    """``0 || g1 || g2 || (g1 + g2)`` with g1 = X+A+B, g2 = X+A+C, X = x1...x5."""
    return ConstructionSpec("construction1", 5, (A, B, C)).build()


def construction1_flipped(g1_spec: AnfLike, g2_spec: AnfLike, a1: int, a2: int, a3: int) -> Anf:
    """``0 || (g1 + a1) || (g2 + a2) || (g1 + g2 + a3)`` over 12 variables."""
    return flipped_concat(g1_spec, g2_spec, a1, a2, a3, n=10, r=6)


def construction2(m: int, M1, M2, M3, M4, a1: int = 0, a2: int = 0) -> Anf:
    """``0 || (g1 + a1) || g2 || (g1 + g2 + a2)`` with g1 = X+M1+M2, g2 = X+M3+M4.

    Lives in 2m + 2 variables with degree <= m + 1.
    """
    return ConstructionSpec("construction2", m, (M1, M2, M3, M4), (a1, a2)).build()


@dataclass(frozen=True)
class Witness:
    """A catalogued explicit codeword ``0 || (g1+a1) || (g2+a2) || (g1+g2+a3)``.

    ``parts`` holds the expected unflipped weights (wt g1, wt g2, wt g1+g2).
    ``origin`` is "stated" for published codewords and "search" for ones
    found here to close a gap in a published range.
    """

    name: str
    family: str
    g1: str
    g2: str
    flips: tuple
    weight: int
    parts: Optional[tuple] = None
    n: int = 10
    origin: str = "stated"

    def halves(self) -> tuple:
        return parse_anf(self.g1, self.n), parse_anf(self.g2, self.n)

    def build(self) -> Anf:
        g1, g2 = self.halves()
        return flipped_concat(g1, g2, *self.flips, n=self.n, r=6)

    def table(self) -> TruthTable:
        g1, g2 = self.halves()
        a1, a2, a3 = self.flips
        z = Anf.zero(self.n)
        g3 = Anf.one(self.n) if (a1 + a2 + a3) & 1 else z
        return four_block_table(z, g1 + a1, g2 + a2, g3)

    def measured_parts(self) -> tuple:
        g1, g2 = self.halves()
        return weight(g1), weight(g2), weight(g1 + g2)

    def to_dict(self) -> dict:
        out = {"name": self.name, "family": self.family, "g1": self.g1, "g2": self.g2,
               "flips": list(self.flips), "weight": self.weight}
        if self.parts is not None:
            out["parts"] = list(self.parts)
        out["origin"] = self.origin
        return out


@lru_cache(maxsize=1)
def catalog_witnesses() -> tuple:
    raw = json.loads(resources.files("rmspectrum.data").joinpath("witnesses.json").read_text())
    n = raw["n"]
    return tuple(
        Witness(e["name"], e["family"], e["g1"], e["g2"], tuple(e["flips"]), e["weight"],
                tuple(e["parts"]) if "parts" in e else None, n, e.get("origin", "stated"))
        for e in raw["witnesses"]
    )


# name used by the published interface
paper_witnesses = catalog_witnesses


def witness_by_name(name: str) -> Witness:
    for w in catalog_witnesses():
        if w.name == name:
            return w
    raise KeyError(name)


def catalog_json(indent: Optional[int] = 1) -> str:
    return json.dumps({"n": 10, "form": "0||(g1+a1)||(g2+a2)||(g1+g2+a3)",
                       "witnesses": [w.to_dict() for w in catalog_witnesses()]}, indent=indent)


def check_witnesses(families: Optional[Sequence[str]] = None) -> list:
    """Build and measure each catalogued codeword; one result dict per entry."""
    results = []
    for w in catalog_witnesses():
        if families is not None and w.family not in families:
            continue
        g = w.build()
        got = weight(g)
        parts = w.measured_parts()
        ok = got == w.weight and g.degree <= 6 and (w.parts is None or parts == w.parts)
        results.append({"name": w.name, "family": w.family, "expected": w.weight, "measured": got,
                        "degree": g.degree, "parts_expected": w.parts, "parts_measured": parts,
                        "passed": ok})
    return results
