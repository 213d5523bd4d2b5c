import itertools
import json
from collections import Counter

import pytest

from rmspectrum.boolfn import Anf, monomial_table
from rmspectrum.constructions import construction2
from rmspectrum.enumeration import (
    PUBLISHED_M4,
    WeightHistogram,
    compare_published,
    conjecture2_check,
    conjecture2_targets,
    enumerate_construction2,
    total_candidates,
)
from rmspectrum.formulas import degree_d_supports, oracle_weight


def brute_force_m2(convention):
    """Histogram at m = 2 built codeword by codeword from the ANF."""
    m, n = 2, 4
    sup = degree_d_supports(n, m)
    pairs = list(itertools.product(sup, repeat=2))
    counts = Counter()
    for p, (M1, M2) in enumerate(pairs):
        for q, (M3, M4) in enumerate(pairs):
            if convention == "unordered-pairs" and q < p:
                continue
            if convention == "nondegenerate":
                t12 = monomial_table(M1, n) ^ monomial_table(M2, n)
                t34 = monomial_table(M3, n) ^ monomial_table(M4, n)
                if t12 == t34:
                    continue
            for a1, a2 in itertools.product((0, 1), repeat=2):
                counts[oracle_weight(construction2(m, M1, M2, M3, M4, a1, a2))] += 1
    return dict(counts)


@pytest.mark.parametrize("convention", ["ordered", "nondegenerate", "unordered-pairs"])
def test_m2_matches_brute_force(convention):
    hist = enumerate_construction2(2, convention=convention)
    assert hist.counts == brute_force_m2(convention)
    expected_total = total_candidates(2, convention)
    if expected_total is not None:
        assert hist.total == expected_total


def test_totals():
    assert total_candidates(3) == 640_000
    assert total_candidates(4) == 96_040_000
    assert total_candidates(4, "unordered-pairs") == 4900 * 4901 // 2 * 4
    assert total_candidates(4, "nondegenerate") is None


def test_m3_full(hist_m3):
    assert hist_m3.total == 640_000 and hist_m3.complete
    assert all(w % 2 == 0 for w in hist_m3.weights())


def test_first_hits_are_real_witnesses(hist_m3):
    for w in hist_m3.weights()[::5]:
        spec = hist_m3.witness(w)
        g = spec.build()
        assert oracle_weight(g) == w and g.degree <= 4


def test_first_hit_is_lexicographically_first():
    m = 2
    sup = degree_d_supports(4, 2)
    hist = enumerate_construction2(m)
    seen = {}
    for i1, i2, i3, i4 in itertools.product(range(len(sup)), repeat=4):
        for a1, a2 in itertools.product((0, 1), repeat=2):
            w = oracle_weight(construction2(m, sup[i1], sup[i2], sup[i3], sup[i4], a1, a2))
            key = (i1 * 6 + i2, i3 * 6 + i4, a1, a2)
            if w not in seen or key < seen[w][0]:
                seen[w] = (key, (i1, i2, i3, i4, a1, a2))
    assert hist.first_hits == {w: v[1] for w, v in seen.items()}


@pytest.mark.parametrize("threads", [2, 8])
def test_thread_count_invariance_m3(hist_m3, threads):
    h = enumerate_construction2(3, threads=threads)
    assert h.to_csv() == hist_m3.to_csv()
    assert h.first_hits == hist_m3.first_hits
    assert h.threads == threads


def test_published_m4_counts_reproduced(hist_m4):
    assert hist_m4.total == 96_040_000
    rows = compare_published(hist_m4)
    assert len(rows) == 32 and all(ok for *_, ok in rows)
    assert hist_m4[80] == 1_426_248 and hist_m4[110] == 33_696
    assert hist_m4[272] == 2_801_168 and hist_m4[302] == 173_088


def test_coverage_targets_m4():
    assert conjecture2_targets(4) == list(range(80, 111, 2)) + list(range(272, 303, 2))
    assert set(conjecture2_targets(4)) == set(PUBLISHED_M4)


def test_coverage_m4(hist_m4):
    rep = conjecture2_check(4, hist_m4)
    assert rep.all_covered and rep.summary() == "32/32 targets covered"
    for w in rep.covered[::7]:
        assert rep.witnesses[w].weight() == w


def test_coverage_of_empty_histogram():
    rep = conjecture2_check(4, None)
    assert rep.covered == [] and len(rep.uncovered) == 32


def test_early_exit_stops_with_coverage():
    h = enumerate_construction2(4, mode="early_exit")
    rep = conjecture2_check(4, h)
    assert rep.all_covered
    assert not h.complete and h.total < 96_040_000


def test_early_exit_threads_agree():
    a = enumerate_construction2(4, mode="early_exit", threads=1)
    b = enumerate_construction2(4, mode="early_exit", threads=3)
    assert a.to_csv() == b.to_csv()


def test_early_exit_unreachable_runs_to_end(hist_m3):
    h = enumerate_construction2(3, mode="early_exit")
    assert h.complete and h.to_csv() == hist_m3.to_csv()


def test_write_files(tmp_path, hist_m3):
    csv_path, meta_path = hist_m3.write(tmp_path / "sub" / "h3.csv")
    assert csv_path.read_text() == hist_m3.to_csv()
    meta = json.loads(meta_path.read_text())
    assert meta["m"] == 3 and meta["total"] == 640_000 and meta["threads"] == 1
    assert csv_path.read_text().splitlines()[0] == "weight,count"


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_construction2(6)
    with pytest.raises(ValueError):
        enumerate_construction2(3, convention="sorted")
    with pytest.raises(ValueError):
        enumerate_construction2(3, threads=0)
    with pytest.raises(ValueError):
        WeightHistogram(3, "ordered", {2: 1}, total=5)
