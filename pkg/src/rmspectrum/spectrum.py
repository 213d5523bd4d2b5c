"""Weight spectra of RM(m-6, m): predicted sets, constructive assembly, induction."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .boolfn import TruthTable, concat4, lift, table_to_anf
from .constructions import catalog_witnesses

# Weights below 2.5 * 64 in RM(6, 12); the same constants hold for every RM(m-6, m), m >= 12.
RM6_12_LOW = frozenset({0, 64, 96, 112, 120, 124, 126, 128, 136, 144, 148, 152, 154, 156, 158})
# Low part of the c = 6 spectrum strictly below the all-even middle range.
LOW_A = frozenset({0, 64, 96, 112, 120, 124, 126, 128, 136, 144, 148})
MIDDLE_START = 152

LOW_TAG = "low-set-constant"
AXIOM_TAG = "axiom:rm5_10-evens"
COMPLEMENT_TAG = "complement"


@dataclass
class SpectrumSet:
    r: int
    m: int
    weights: frozenset
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.weights = frozenset(self.weights)
        top = 1 << self.m
        bad = [w for w in self.weights if not 0 <= w <= top]
        if bad:
            raise ValueError(f"weights outside [0, {top}]: {sorted(bad)[:5]}")

    def __contains__(self, w) -> bool:
        return w in self.weights

    def __len__(self) -> int:
        return len(self.weights)

    def sorted(self) -> list:
        return sorted(self.weights)

    def complement_closed(self) -> bool:
        top = 1 << self.m
        return all(top - w in self.weights for w in self.weights)

    def all_even(self) -> bool:
        return all(w % 2 == 0 for w in self.weights)

    def provenance_breakdown(self) -> dict:
        out: dict = {}
        for tag in self.provenance.values():
            kind = tag.split(":", 1)[0]
            out[kind] = out.get(kind, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "weights": self.sorted(),
            "provenance": {str(w): self.provenance[w] for w in sorted(self.provenance)},
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def kasami_range1_weights(r: int, m: int) -> set:
    """Weights of RM(r, m) in [2^(m-r), 2^(m-r+1)).

    They are 2^(m-r+1) - 2^(m-r+1-i) for 1 <= i <= max(min(m-r, r), (m-r+2)/2).
    First-order codes are special-cased: their only such weight is 2^(m-1).
    """
    if not 1 <= r <= m - 1:
        raise ValueError(f"need 1 <= r <= m - 1, got r={r}, m={m}")
    if r == 1:
        return {1 << (m - 1)}
    top = max(min(m - r, r), (m - r + 2) // 2)
    e = m - r + 1
    return {(1 << e) - (1 << (e - i)) for i in range(1, top + 1) if e - i >= 0}


def rm6_12_low_set() -> set:
    return set(RM6_12_LOW)


def predicted_spectrum(m: int) -> SpectrumSet:
    """Closed-form spectrum of RM(m-6, m) for m >= 12."""
    if m < 12:
        raise ValueError(f"the c = 6 spectrum formula needs m >= 12, got {m}")
    top = 1 << m
    middle = range(MIDDLE_START, top - MIDDLE_START + 1, 2)
    weights = set(LOW_A) | set(middle) | {top - a for a in LOW_A}
    return SpectrumSet(m - 6, m, frozenset(weights))


def conjecture1_shape(c: int, m: int, A: Iterable[int], B: Iterable[int]) -> SpectrumSet:
    """{0} + A + B + C + complements + {2^m}, with C every even weight from 2^(c+1) + 2^(c-1) to 2^(m-1)."""
    if m < 2 * c:
        raise ValueError(f"need m >= 2c, got c={c}, m={m}")
    A, B = set(A), set(B)
    lo_a, hi_a = 1 << c, 1 << (c + 1)
    hi_b = hi_a + (1 << (c - 1))
    if any(not lo_a <= a <= hi_a for a in A):
        raise ValueError(f"A must lie in [{lo_a}, {hi_a}]")
    if any(not hi_a <= b <= hi_b for b in B):
        raise ValueError(f"B must lie in [{hi_a}, {hi_b}]")
    top = 1 << m
    start = hi_b + (hi_b & 1)
    C = set(range(start, (top >> 1) + 1, 2))
    half = {0} | A | B | C
    return SpectrumSet(m - c, m, frozenset(half | {top - w for w in half}))


@lru_cache(maxsize=1)
def lemma8_witnesses() -> tuple:
    """Degree <= 4 functions of 8 variables with weights 16i, i = 0..16.

    Witness i is the indicator of i disjoint cosets of the subspace
    {x1 = x2 = x3 = x4 = 0}; coset v is the product of the affine forms
    (x_k + v_k + 1), k = 1..4, so each indicator has degree 4 and the
    weights add.
    """
    n = 8
    out = []
    # cosets listed by (x1..x4) value, starting from all-ones so i = 1 is x1 x2 x3 x4
    values = list(range(15, -1, -1))
    for i in range(17):
        chosen = set(values[:i])
        t = TruthTable.from_function(n, lambda x: int((x[0] | x[1] << 1 | x[2] << 2 | x[3] << 3) in chosen))
        f = table_to_anf(t)
        assert f.degree <= 4 and t.weight == 16 * i
        out.append((16 * i, f))
    return tuple(out)


def _tag_priority(tag: str) -> int:
    if tag.startswith("witness") or tag.startswith("formula"):
        return 0
    if tag == LOW_TAG:
        return 1
    if tag.startswith("axiom"):
        return 2
    return 3


def _record(prov: dict, w: int, tag: str) -> None:
    old = prov.get(w)
    if old is None or _tag_priority(tag) < _tag_priority(old):
        prov[w] = tag


def assemble_rm6_12_achieved(axiom_lemma9: bool = True, rm5_10_evens: Optional[Iterable[int]] = None) -> SpectrumSet:
    """Weights of RM(6, 12) reached by explicit codewords plus injected facts.

    Every catalogued concatenation is rebuilt with a weight-64i block
    g0 in front (g0 = a lifted degree-4 witness of weight 16i), measured
    from its truth table, and checked to have degree <= 6. With the axiom on,
    twice every even weight in [72, 952] (the doubling 0||0||f||f of a
    RM(5, 10) word) is added. Complements close the set.
    """
    n = 10
    top = 1 << 12
    prov: dict = {}
    for w in RM6_12_LOW:
        _record(prov, w, LOW_TAG)

    g0_tables = [(w, lift(f.table(), n)) for w, f in lemma8_witnesses()]
    for wit in catalog_witnesses():
        g1, g2 = wit.halves()
        a1, a2, a3 = wit.flips
        t1 = (g1 + a1).table()
        t2 = (g2 + a2).table()
        t3 = (g1 + g2 + a3).table()
        for i, (w0, t0) in enumerate(g0_tables):
            g = concat4(t0, t1, t2, t3)
            assert table_to_anf(g).degree <= 6, wit.name
            _record(prov, g.weight, f"witness:{wit.name}+g0[{i}]")

    if axiom_lemma9:
        evens = range(72, 953, 2) if rm5_10_evens is None else rm5_10_evens
        for w in evens:
            _record(prov, 2 * w, AXIOM_TAG)

    for w, tag in list(prov.items()):
        _record(prov, top - w, COMPLEMENT_TAG)
    return SpectrumSet(6, 12, frozenset(prov), prov)


def theorem2_induction_step(S: SpectrumSet) -> SpectrumSet:
    """Spectrum of RM(m-5, m+1) from the spectrum S of RM(m-6, m).

    The maps are: f -> 0||f (weight kept), f -> g||f with a fixed weight-152
    word g (weight + 152), and complement in 2^(m+1). The result is then
    capped by the known low weights and evenness.
    """
    if MIDDLE_START not in S:
        raise ValueError("the shift map needs a weight-152 word in the input spectrum")
    m1 = S.m + 1
    top = 1 << m1
    lifted = set(S.weights)
    shifted = {MIDDLE_START + w for w in S.weights}
    half = lifted | shifted
    out = half | {top - w for w in half}
    allowed_low = LOW_A | {top - a for a in LOW_A}
    out = {w for w in out if w % 2 == 0 and (MIDDLE_START <= w <= top - MIDDLE_START or w in allowed_low)}
    return SpectrumSet(S.r + 1, m1, frozenset(out))
