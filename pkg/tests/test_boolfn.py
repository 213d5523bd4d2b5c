import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmspectrum.boolfn import (
    ZERO_DEGREE,
    Anf,
    AnfSyntaxError,
    Monomial,
    TruthTable,
    add,
    anf_to_table,
    complement,
    concat2,
    concat4,
    degree,
    distance,
    lift,
    parse_anf,
    table_to_anf,
    weight,
)


def tables(n):
    return st.integers(min_value=0, max_value=(1 << (1 << n)) - 1).map(lambda b: TruthTable(n, b))


# --- parsing ---

@pytest.mark.parametrize("text,n,expected", [
    ("x1*x2 + x3", 3, "x3 + x1*x2"),
    ("x2*x1", 2, "x1*x2"),
    ("x1 + x1", 4, "0"),
    ("x1*x1*x2", 2, "x1*x2"),
    ("1 + x1 + 1", 1, "x1"),
    ("0", 10, "0"),
    ("  x3 *x2+   1 ", 3, "1 + x2*x3"),
])
def test_parse_canonical_forms(text, n, expected):
    assert str(parse_anf(text, n)) == expected


@pytest.mark.parametrize("text,n", [
    ("x11*x1", 10),
    ("x0", 3),
    ("x1 +", 2),
    ("+ x1", 2),
    ("x1x2", 2),
    ("x1 ^ x2", 2),
    ("y1", 2),
    ("", 2),
    ("x1 * * x2", 2),
])
def test_parse_rejects(text, n):
    with pytest.raises(AnfSyntaxError):
        parse_anf(text, n)


def test_parse_error_has_position():
    with pytest.raises(AnfSyntaxError) as exc:
        parse_anf("x1 + x2 ? x3", 3)
    assert exc.value.position == 8


def test_anf_zero_degree_sentinel():
    assert Anf.zero(5).degree == ZERO_DEGREE < 0
    assert Anf.one(5).degree == 0


def test_monomial_products_collapse():
    m = Monomial([1, 2], 4) * Monomial([2, 3], 4)
    assert m.vars == frozenset({1, 2, 3}) and m.degree == 3


# --- table conversions ---

def test_single_variable_table():
    assert anf_to_table(parse_anf("x1", 1)).to_list() == [0, 1]


def test_x1_is_least_significant():
    t = anf_to_table(parse_anf("x1", 3))
    assert t.to_list() == [0, 1, 0, 1, 0, 1, 0, 1]
    t = anf_to_table(parse_anf("x3", 3))
    assert t.to_list() == [0, 0, 0, 0, 1, 1, 1, 1]


@pytest.mark.parametrize("text,w", [
    ("x1*x2*x3*x4*x5", 32),
    ("x1*x2*x3*x4*x5 + x1*x2*x6*x7*x8", 56),
    ("x1*x2*x3*x4*x5 + x6*x7*x8*x9*x10", 62),
    ("x1*x2*x3*x6*x7 + x1*x6*x7*x8*x9 + x4*x5*x8*x9*x10 + x6*x7*x8*x9*x10", 78),
])
def test_known_weights(text, w):
    f = parse_anf(text, 10)
    assert weight(anf_to_table(f)) == w
    assert weight(anf_to_table(f, method="terms")) == w


def test_sum_of_disjoint_and_overlapping_halves():
    g1 = anf_to_table(parse_anf("x1*x2*x3*x4*x5 + x6*x7*x8*x9*x10", 10))
    g2 = anf_to_table(parse_anf("x1*x2*x3*x4*x5 + x1*x2*x6*x7*x8", 10))
    assert weight(add(g1, g2)) == 48 == distance(g1, g2)


def test_zero_table_to_zero_anf():
    assert table_to_anf(TruthTable.zero(3)).is_zero()


def test_small_round_trip_two_terms():
    f = parse_anf("x1 + x2", 2)
    assert table_to_anf(anf_to_table(f)) == f and len(f.terms) == 2


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_round_trip_exhaustive(n):
    for bits in range(1 << (1 << n)):
        t = TruthTable(n, bits)
        f = table_to_anf(t)
        assert anf_to_table(f) == t
        assert anf_to_table(f, method="terms") == t
        assert table_to_anf(anf_to_table(f)) == f


def test_round_trip_random_n10():
    rng = random.Random(20240601)
    for _ in range(10_000):
        t = TruthTable(10, rng.getrandbits(1 << 10))
        assert anf_to_table(table_to_anf(t)) == t


@pytest.mark.parametrize("n", [8, 11, 12])
def test_round_trip_random_anf(n):
    rng = random.Random(n)
    for _ in range(20):
        terms = [[v for v in range(1, n + 1) if rng.random() < 0.4] for _ in range(rng.randint(0, 30))]
        f = Anf(terms, n)
        assert table_to_anf(anf_to_table(f)) == f
        assert anf_to_table(f) == anf_to_table(f, method="terms")


def test_hex_round_trip_and_layout():
    assert TruthTable(1, 0b10).to_hex() == "02"
    assert TruthTable(3, 0b1).to_hex() == "01"
    t = anf_to_table(parse_anf("x4", 4))
    assert t.to_hex() == "00ff"
    for n in (0, 2, 3, 5, 8):
        t = TruthTable(n, random.Random(n).getrandbits(1 << n))
        assert TruthTable.from_hex(t.to_hex(), n) == t
    with pytest.raises(ValueError):
        TruthTable.from_hex("00", 5)


def test_table_validation():
    with pytest.raises(ValueError):
        TruthTable(2, 1 << 4)
    with pytest.raises(ValueError):
        TruthTable.from_bits([0, 1, 1])


# --- concatenation ---

@settings(max_examples=200)
@given(st.integers(0, 6).flatmap(lambda n: st.tuples(tables(n), tables(n))))
def test_concat2_weight_additive(pair):
    f1, f2 = pair
    g = concat2(f1, f2)
    assert g.n == f1.n + 1 and g.weight == f1.weight + f2.weight
    assert g.blocks(1) == [f1, f2]


@settings(max_examples=200)
@given(st.integers(0, 5).flatmap(lambda n: st.tuples(tables(n), tables(n), tables(n), tables(n))))
def test_concat4_weight_additive_and_blocks(quad):
    g = concat4(*quad)
    assert g.weight == sum(t.weight for t in quad)
    assert g.blocks(2) == list(quad)
    assert g == concat2(concat2(quad[0], quad[1]), concat2(quad[2], quad[3]))


def test_concat_identities():
    f = anf_to_table(parse_anf("x1*x2 + x3", 4))
    z = TruthTable.zero(4)
    assert concat2(z, f).weight == f.weight
    assert concat2(f, f) == lift(f, 5)
    assert concat4(z, z, f, f).weight == 2 * f.weight
    assert table_to_anf(concat4(f, f, f, f)) == table_to_anf(f).lift(6)


def test_concat_size_mismatch():
    with pytest.raises(ValueError):
        concat2(TruthTable.zero(2), TruthTable.zero(3))


def test_concat2_anf_form():
    # (x_{n+1} + 1) f1 + x_{n+1} f2
    rng = random.Random(3)
    for _ in range(50):
        f1, f2 = (table_to_anf(TruthTable(4, rng.getrandbits(16))) for _ in range(2))
        x = Anf([[5]], 5)
        assert table_to_anf(concat2(f1.table(), f2.table())) == (x + 1) * f1.lift(5) + x * f2.lift(5)


# --- complement, sums, degree ---

@settings(max_examples=200)
@given(st.integers(0, 8).flatmap(tables))
def test_complement_symmetry(t):
    c = complement(t)
    assert c.weight == (1 << t.n) - t.weight
    assert complement(c) == t
    assert ~t == c


def test_complement_of_weight_166_word():
    assert complement(TruthTable.zero(12)).weight == 4096
    bits = (1 << 166) - 1
    assert complement(TruthTable(12, bits)).weight == 3930


@settings(max_examples=200)
@given(st.integers(0, 7).flatmap(lambda n: st.tuples(tables(n), tables(n))))
def test_sum_weight_identity(pair):
    f, g = pair
    assert weight(add(f, g)) == f.weight + g.weight - 2 * (f & g).weight
    assert add(f, f) == TruthTable.zero(f.n)
    assert add(f, TruthTable.zero(f.n)) == f


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parity_degree_law_exhaustive(n):
    for bits in range(1 << (1 << n)):
        t = TruthTable(n, bits)
        assert (t.weight % 2 == 1) == (degree(t) == n)


def test_parity_degree_law_random_n6():
    rng = random.Random(6)
    for _ in range(2000):
        t = TruthTable(6, rng.getrandbits(64))
        assert (t.weight % 2 == 1) == (degree(t) == 6)


def test_degree_examples():
    assert degree(Anf.one(3)) == 0
    assert degree(TruthTable.zero(3)) == ZERO_DEGREE
    assert degree(parse_anf("x1*x2*x3 + x4", 4)) == 3
    for n in range(1, 5):
        for vs in itertools.chain.from_iterable(itertools.combinations(range(1, n + 1), k) for k in range(n + 1)):
            assert degree(Monomial(vs, n).table()) == len(vs)


def test_anf_arithmetic():
    f = parse_anf("x1 + x2", 3)
    g = parse_anf("x1 + x3", 3)
    assert str(f + g) == "x2 + x3"
    assert str(f * g) == "x1 + x1*x2 + x1*x3 + x2*x3"
    assert (f * g).table() == f.table() & g.table()
    assert f + 1 == parse_anf("1 + x1 + x2", 3)
    with pytest.raises(ValueError):
        f + parse_anf("x1", 4)
