import itertools

import pytest

from rmspectrum.boolfn import Anf, parse_anf
from rmspectrum.formulas import (
    IntersectionProfile,
    check_three_monomial,
    check_two_monomial,
    degree_d_supports,
    oracle_weight,
    profile_of,
    realizable_profiles,
    three_monomial_weight,
    three_monomial_weight_set,
    two_monomial_weight,
    two_monomial_weight_set,
)


def oracle_pair_weights(n, d):
    sup = degree_d_supports(n, d)
    return {oracle_weight(Anf([I, J], n)) for I, J in itertools.product(sup, repeat=2)}


def test_two_monomial_values_10_5():
    assert two_monomial_weight_set(10, 5) == {0, 32, 48, 56, 60, 62}
    assert two_monomial_weight(10, 5, 0) == 62
    assert two_monomial_weight(10, 5, 5) == 0


@pytest.mark.parametrize("n,d", [(8, 4), (6, 3), (2, 1), (7, 3)])
def test_two_monomial_set_matches_oracle(n, d):
    assert two_monomial_weight_set(n, d) == oracle_pair_weights(n, d)


def test_two_monomial_trivial():
    assert two_monomial_weight_set(2, 1) == {0, 2}


def test_two_monomial_rejects_bad_overlap():
    with pytest.raises(ValueError):
        two_monomial_weight(10, 5, 6)


def test_two_monomial_exhaustive_8_4():
    rep = check_two_monomial(8, 4)
    assert rep.passed and rep.cases == 70 * 70


def test_profile_examples():
    I = range(1, 6)
    assert profile_of(I, I, I, 10).as_tuple() == (5, 5, 5, 5)
    assert profile_of(I, [1, 2, 3, 6, 7], [4, 5, 8, 9, 10], 10).as_tuple() == (3, 2, 0, 0)
    p = profile_of(I, [1, 2, 3, 4, 6], [1, 2, 3, 4, 7], 10)
    # |I∩J|, |I∩K|, |J∩K|, |I∩J∩K| by direct set arithmetic
    a, b, c = set(I), {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}
    assert p.as_tuple() == (len(a & b), len(a & c), len(b & c), len(a & b & c))


def test_profile_validation():
    with pytest.raises(ValueError):
        IntersectionProfile(5, 5, 5, 4, 5, 10)  # empty Venn region count goes negative
    with pytest.raises(ValueError):
        IntersectionProfile(0, 0, 0, 0, 5, 10)  # 15 variables needed


def test_three_monomial_known_profile():
    p = profile_of(range(1, 6), [1, 2, 3, 6, 7], [4, 5, 8, 9, 10], 10)
    f = parse_anf("x1*x2*x3*x4*x5 + x1*x2*x3*x6*x7 + x4*x5*x8*x9*x10", 10)
    assert three_monomial_weight(p) == oracle_weight(f) == 74


def test_three_monomial_only_10_5():
    with pytest.raises(ValueError):
        three_monomial_weight(IntersectionProfile(2, 2, 2, 1, 4, 8))


def test_three_monomial_weight_set():
    assert three_monomial_weight_set() == {32, 48, 56, 60, 62, 64, 68, 72, 74, 76, 80}


def test_realizable_profiles_consistent():
    profiles = realizable_profiles()
    seen = {profile_of(range(1, 6), J, K, 10).as_tuple()
            for J, K in itertools.product(degree_d_supports(10, 5), repeat=2)}
    # every fixed-I profile is realizable, and vice versa by symmetry of relabelling
    assert seen == {p.as_tuple() for p in profiles}


def test_three_monomial_exhaustive():
    rep = check_three_monomial()
    assert rep.cases == 252 ** 2
    assert rep.mismatches == 0, rep.examples[:3]
    oracle = {oracle_weight(Anf([range(1, 6), J, K], 10))
              for J, K in itertools.product(degree_d_supports(10, 5), repeat=2)}
    assert oracle == three_monomial_weight_set()


def test_four_monomial_weight_via_oracle():
    f = parse_anf("x1*x2*x3*x6*x7 + x1*x6*x7*x8*x9 + x4*x5*x8*x9*x10 + x6*x7*x8*x9*x10", 10)
    assert oracle_weight(f) == 78
