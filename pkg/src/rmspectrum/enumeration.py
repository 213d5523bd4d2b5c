"""Exhaustive weight histograms of the generalized shared-monomial construction.

For g1 = X + M1 + M2 and g2 = X + M3 + M4 (X = x1...xm, every M a degree-m
monomial in 2m variables) the codeword ``0 || (g1+a1) || g2 || (g1+g2+a2)``
has weight wt(g1+a1) + wt(g2) + wt(g1+g2+a2). Only three 2^(2m)-bit tables
matter, so each candidate costs one XOR and one popcount over packed words.

Work is split by the index of M1. Each chunk fills a private histogram and
the chunks are merged in index order, so the output does not depend on the
worker count.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .boolfn import monomial_table
from .constructions import ConstructionSpec
from .formulas import degree_d_supports

CONVENTIONS = ("ordered", "nondegenerate", "unordered-pairs")
SUPPORTED_M = (2, 3, 4, 5)
# int64 elements per vectorized batch; bounds peak memory at a few hundred MB
_BATCH_ELEMS = 1 << 22

# Published counts for m = 4: weight -> number of functions.
PUBLISHED_M4 = {
    80: 1426248, 82: 85248, 84: 1680384, 86: 208224, 88: 2789312, 90: 351872,
    92: 3152040, 94: 541824, 96: 3690240, 98: 516192, 100: 3553440, 102: 465024,
    104: 2186472, 106: 190080, 108: 940032, 110: 33696,
    272: 2801168, 274: 323648, 276: 4203144, 278: 601632, 280: 6844464, 282: 849888,
    284: 7165472, 286: 916336, 288: 7051536, 290: 816576, 292: 5449440, 294: 629808,
    296: 3956448, 298: 373984, 300: 2145576, 302: 173088,
}


@dataclass
class WeightHistogram:
    m: int
    convention: str
    counts: dict
    total: int
    complete: bool = True
    threads: int = 1
    wall_time: float = 0.0
    # weight -> first (M1, M2, M3, M4, a1, a2) index tuple in enumeration order
    first_hits: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("negative count")
        if sum(self.counts.values()) != self.total:
            raise ValueError("counts do not sum to the enumerated total")

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def weights(self) -> list:
        return sorted(w for w, c in self.counts.items() if c)

    def witness(self, w: int) -> Optional[ConstructionSpec]:
        hit = self.first_hits.get(w)
        if hit is None:
            return None
        supports = degree_d_supports(2 * self.m, self.m)
        i1, i2, i3, i4, a1, a2 = hit
        return ConstructionSpec("construction2", self.m,
                                (supports[i1], supports[i2], supports[i3], supports[i4]), (a1, a2))

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{w},{self.counts[w]}" for w in self.weights()]
        return "\n".join(lines) + "\n"

    def metadata(self) -> dict:
        return {
            "m": self.m,
            "convention": self.convention,
            "total": self.total,
            "complete": self.complete,
            "threads": self.threads,
            "wall_time": round(self.wall_time, 3),
        }

    def write(self, out: os.PathLike) -> tuple:
        """Write ``<out>.csv`` and the ``<out>.json`` metadata sidecar."""
        out = Path(out)
        if out.suffix in (".csv", ".json"):
            out = out.with_suffix("")
        out.parent.mkdir(parents=True, exist_ok=True)
        csv_path, meta_path = out.with_suffix(".csv"), out.with_suffix(".json")
        csv_path.write_text(self.to_csv())
        meta_path.write_text(json.dumps(self.metadata(), indent=1) + "\n")
        return csv_path, meta_path


def _packed(bits: int, nbits: int) -> np.ndarray:
    nwords = max(1, nbits // 64)
    return np.frombuffer(bits.to_bytes(nwords * 8, "little"), dtype="<u8").astype(np.uint64)


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).sum(axis=-1, dtype=np.int64)


class _Tables:
    """Packed truth tables of every M1 + M2 and X + M1 + M2, indexed by M1 * C + M2."""

    def __init__(self, m: int):
        n = 2 * m
        self.m, self.n, self.N = m, n, 1 << n
        self.supports = degree_d_supports(n, m)
        self.C = len(self.supports)
        mono = np.stack([_packed(monomial_table(s, n), self.N) for s in self.supports])
        x = _packed(monomial_table(frozenset(range(1, m + 1)), n), self.N)
        self.pair = (mono[:, None, :] ^ mono[None, :, :]).reshape(self.C * self.C, -1)
        self.wg = _popcount(self.pair ^ x)


def total_candidates(m: int, convention: str = "ordered") -> Optional[int]:
    """Candidate count, or None when it depends on the data (nondegenerate)."""
    P = comb(2 * m, m) ** 2
    if convention == "ordered":
        return P * P * 4
    if convention == "unordered-pairs":
        return P * (P + 1) // 2 * 4
    return None


def _run_chunk(tab: _Tables, i: int, convention: str) -> tuple:
    """Histogram and first hits for all candidates whose M1 has index i."""
    C, N = tab.C, tab.N
    Q = C * C
    nwords = tab.pair.shape[1]
    hist = np.zeros(3 * N + 1, dtype=np.int64)
    first: dict = {}
    rows = max(1, _BATCH_ELEMS // (Q * nwords))
    for start in range(i * C, (i + 1) * C, rows):
        stop = min(start + rows, (i + 1) * C)
        w12 = _popcount(tab.pair[start:stop, None, :] ^ tab.pair[None, :, :])
        w1 = tab.wg[start:stop, None]
        w2 = tab.wg[None, :]
        keep = None
        if convention == "nondegenerate":
            keep = w12 != 0
        elif convention == "unordered-pairs":
            keep = np.arange(Q)[None, :] >= np.arange(start, stop)[:, None]
        kept_at = np.flatnonzero(keep) if keep is not None else None
        for a1 in (0, 1):
            for a2 in (0, 1):
                W = (N - w1 if a1 else w1) + w2 + (N - w12 if a2 else w12)
                flat = W[keep] if keep is not None else W.ravel()
                cnt = np.bincount(flat, minlength=3 * N + 1)
                hist += cnt
                # a hit from an earlier block always has a smaller key
                if all(w in first and first[w][0] < start for w in np.flatnonzero(cnt).tolist()):
                    continue
                values, idx = np.unique(flat, return_index=True)
                if kept_at is not None:
                    idx = kept_at[idx]
                for w, at in zip(values.tolist(), idx.tolist()):
                    key = (start + at // Q, at % Q, a1, a2)
                    if w not in first or key < first[w]:
                        first[w] = key
    return hist, first


def enumerate_construction2(m: int, mode: str = "full", threads: int = 1,
                            convention: str = "ordered",
                            targets: Optional[Iterable[int]] = None) -> WeightHistogram:
    """Weight histogram over every (M1, M2, M3, M4, a1, a2).

    ``mode="early_exit"`` stops after the first prefix of M1 indices whose
    candidates cover every weight in ``targets``; the histogram then only
    describes that prefix (``complete`` is False).
    """
    if m not in SUPPORTED_M:
        raise ValueError(f"m={m} unsupported; choose from {SUPPORTED_M}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    if mode not in ("full", "early_exit"):
        raise ValueError(f"unknown mode {mode!r}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if mode == "early_exit":
        targets = set(conjecture2_targets(m) if targets is None else targets)

    t0 = time.perf_counter()
    tab = _Tables(m)
    hist = np.zeros(3 * tab.N + 1, dtype=np.int64)
    first: dict = {}
    stopped_early = False

    def merge(res):
        h, f = res
        np.add(hist, h, out=hist)
        for w, key in f.items():
            if w not in first or key < first[w]:
                first[w] = key

    def covered() -> bool:
        return all(0 <= w < hist.size and hist[w] > 0 for w in targets)

    if threads == 1:
        for i in range(tab.C):
            merge(_run_chunk(tab, i, convention))
            if mode == "early_exit" and covered():
                stopped_early = i + 1 < tab.C
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            window = 2 * threads
            pending = {}
            next_i = 0
            for i in range(tab.C):
                while next_i < tab.C and next_i < i + window:
                    pending[next_i] = pool.submit(_run_chunk, tab, next_i, convention)
                    next_i += 1
                merge(pending.pop(i).result())
                if mode == "early_exit" and covered():
                    stopped_early = i + 1 < tab.C
                    for fut in pending.values():
                        fut.cancel()
                    break

    C = tab.C
    first_hits = {w: (p // C, p % C, q // C, q % C, a1, a2) for w, (p, q, a1, a2) in first.items()}
    counts = {int(w): int(c) for w, c in enumerate(hist) if c}
    return WeightHistogram(
        m=m, convention=convention, counts=counts, total=int(hist.sum()),
        complete=not stopped_early, threads=threads,
        wall_time=time.perf_counter() - t0, first_hits=first_hits,
    )


def construction1_weight_set() -> set:
    """Every weight of ``0 || (X+A+B) || (X+A+C) || (B+C)`` over all 252^3 quintic triples.

    Block weights come from the two- and three-monomial closed forms, which
    are exact on this domain (X is the fixed monomial of the exhaustive check).
    """
    supports = degree_d_supports(10, 5)
    masks = np.array([sum(1 << (v - 1) for v in s) for s in supports], dtype=np.int64)
    X = 0b11111

    def pc(a):
        return np.bitwise_count(a).astype(np.int64)

    cx = pc(masks & X)
    both = masks[:, None] & masks[None, :]
    c3 = pc(both)
    c4 = pc(both & X)
    # wt(X + A + B) indexed [A, B]
    w3 = (2 ** (cx[:, None] + cx[None, :] + c3 - c4 - 3) - 2 ** (cx[:, None] + 1)
          - 2 ** (cx[None, :] + 1) - 2 ** (c3 + 1) + 96)
    # wt(B + C) indexed [B, C]
    w2 = 2 ** 6 - 2 ** (c3 + 1)
    seen: set = set()
    for a in range(len(supports)):
        seen.update(np.unique(w3[a][:, None] + w3[a][None, :] + w2).tolist())
    return seen


def conjecture2_targets(m: int) -> list:
    """{2^(m+2) + 2^m + 2i} and {2^(2m) + 2^m + 2i} for 0 <= i < 2^m."""
    lo = (1 << (m + 2)) + (1 << m)
    hi = (1 << (2 * m)) + (1 << m)
    return [lo + 2 * i for i in range(1 << m)] + [hi + 2 * i for i in range(1 << m)]


@dataclass
class CoverageReport:
    m: int
    targets: list
    counts: dict
    witnesses: dict

    @property
    def covered(self) -> list:
        return [w for w in self.targets if self.counts.get(w, 0) > 0]

    @property
    def uncovered(self) -> list:
        return [w for w in self.targets if self.counts.get(w, 0) == 0]

    @property
    def all_covered(self) -> bool:
        return not self.uncovered

    def summary(self) -> str:
        return f"{len(self.covered)}/{len(self.targets)} targets covered"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "covered": len(self.covered),
            "targets": len(self.targets),
            "uncovered": self.uncovered,
            "per_target": [
                {"weight": w, "count": self.counts.get(w, 0),
                 "witness": self.witnesses[w].to_dict() if w in self.witnesses else None}
                for w in self.targets
            ],
        }


def conjecture2_check(m: int, hist: Optional[WeightHistogram]) -> CoverageReport:
    targets = conjecture2_targets(m)
    if hist is None:
        return CoverageReport(m, targets, {}, {})
    if hist.m != m:
        raise ValueError(f"histogram is for m={hist.m}, not {m}")
    counts = {w: hist[w] for w in targets}
    witnesses = {}
    for w in targets:
        spec = hist.witness(w) if counts[w] else None
        if spec is not None:
            witnesses[w] = spec
    return CoverageReport(m, targets, counts, witnesses)


def compare_published(hist: WeightHistogram) -> list:
    """Rows (weight, expected, actual, match) against the published m = 4 counts."""
    return [(w, c, hist[w], hist[w] == c) for w, c in sorted(PUBLISHED_M4.items())]
