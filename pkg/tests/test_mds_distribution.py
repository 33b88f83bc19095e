import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bsymbol.counting import binom
from bsymbol.errors import InvalidB, InvalidProfile, NotMDSQuery
from bsymbol.gf import make_field
from bsymbol.linear_code import rs_code
from bsymbol.mds_distribution import (
    FProfile,
    b_distribution,
    corollary_check,
    f_count,
    f_weight,
    full_weight_count_b3,
    hamming_count,
    hamming_distribution,
    pair_distribution,
    summation_bounds,
)
from bsymbol.oracle import brute_distributions, brute_F
from bsymbol.weights import (
    BRUTE_FORCE,
    CLOSED_FORM,
    SPECIAL_CASE,
    DistributionQuery,
    WeightDistribution,
)

Q = DistributionQuery


def test_hamming_count_examples():
    assert hamming_count(3, 3, 11) == 10
    assert hamming_count(4, 3, 11) == 80
    assert hamming_count(2, 3, 11) == 0
    assert hamming_count(5, 3, 11) == sum(
        (-1) ** j * binom(5, j) * (11 ** (3 - j) - 1) for j in range(3))


def test_hamming_distribution_example():
    dist = hamming_distribution(11, 6, 4)
    assert dist.as_list() == [1, 0, 0, 200, 1200, 4980, 8260]
    assert dist.total == 11**4


def test_f_weight_examples():
    for b in range(3, 7):
        for L in range(1, 8):
            assert f_weight(b, L, L) == 1
    assert f_weight(3, 4, 3) == 2
    assert f_weight(3, 4, 2) == 0
    with pytest.raises(InvalidB):
        f_weight(2, 3, 2)


def test_f_weight_matches_enumeration():
    # length-L zero patterns: first and last nonzero, m nonzeros, no zero run >= b-1
    for b in range(3, 7):
        for L in range(1, 11):
            for m in range(1, L + 1):
                count = 0
                for bits in itertools.product((0, 1), repeat=L):
                    if bits[0] and bits[-1] and sum(bits) == m:
                        runs = "".join(map(str, bits)).split("1")
                        count += max(len(r) for r in runs) <= b - 2
                assert f_weight(b, L, m) == count, (b, L, m)


def test_f_examples():
    assert f_count(FProfile(3, 3, (3,), 11)) == 10
    assert f_count(FProfile(3, 3, (4,), 11)) == 100
    assert f_count(FProfile(3, 3, (1, 2), 11)) == 10
    # two blocks of total length d + 1: A(4,3) + A(3,3) codewords qualify
    assert f_count(FProfile(3, 3, (1, 3), 11)) == 90
    assert f_count(FProfile(2, 3, (2, 3), 11)) == hamming_count(5, 3, 11)


def test_f_two_block_example_by_scan():
    assert brute_F(FProfile(3, 3, (1, 3), 11), make_field(11)) == 90
    assert brute_F(FProfile(3, 3, (1, 2), 11), make_field(11)) == 10


def test_f_profile_validation():
    with pytest.raises(InvalidProfile):
        FProfile(3, 3, (1, 1), 11)
    with pytest.raises(InvalidProfile):
        FProfile(3, 3, (0, 3), 11)
    with pytest.raises(InvalidB):
        FProfile(1, 3, (3,), 11)
    assert FProfile(3, 2, (2, 3), 7).total == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(1, 4), st.sampled_from([5, 7, 11]),
       st.lists(st.integers(1, 5), min_size=1, max_size=4), st.randoms())
def test_f_is_symmetric(b, d, q, lengths, rnd):
    if sum(lengths) < d:
        return
    shuffled = list(lengths)
    rnd.shuffle(shuffled)
    assert f_count(FProfile(b, d, tuple(lengths), q)) == f_count(FProfile(b, d, tuple(shuffled), q))


def test_summation_bounds_are_exact_rationals():
    s = summation_bounds(5, 3, 0, 3, 6)
    assert isinstance(s.m1, Fraction) and isinstance(s.m2, Fraction)


def test_rs_6_4_11_distribution():
    dist = b_distribution(Q(11, 6, 4, 3))
    assert dist.as_list() == [1, 0, 0, 0, 0, 60, 14580]
    assert dist.mode == CLOSED_FORM


def test_trivial_regime():
    dist = b_distribution(Q(11, 6, 4, 4))
    assert dist.mode == SPECIAL_CASE
    assert dist.as_list() == [1, 0, 0, 0, 0, 0, 11**4 - 1]
    assert b_distribution(Q(11, 6, 4, 9)).as_list() == dist.as_list()


def test_query_validation():
    with pytest.raises(InvalidB):
        Q(11, 6, 4, 0)
    with pytest.raises(NotMDSQuery):
        Q(11, 6, 7, 2)
    with pytest.raises(NotMDSQuery):
        b_distribution((11, 6, 4, 3))


def test_pair_formula_matches_scan_on_small_codes():
    f = make_field(7)
    for n in range(3, 8):
        for k in range(2, n):
            if 7**k > 10**5:
                continue
            scan = brute_distributions(rs_code(f, n, k), [2])[2]
            assert pair_distribution(7, n, k).as_list() == scan.as_list(), (n, k)


def test_pair_formula_needs_two_dimensions():
    with pytest.raises(NotMDSQuery):
        pair_distribution(7, 4, 1)
    checks = {c.name: c for c in corollary_check(Q(7, 4, 1, 2))}
    assert not checks["symbol-pair formula"].applicable


def test_full_weight_b3_example():
    assert full_weight_count_b3(11, 3) == 14580


@pytest.mark.parametrize("q,n,k", [(7, 6, 3), (7, 7, 4), (8, 7, 3), (9, 8, 5), (11, 6, 4)])
def test_closed_form_matches_scan(q, n, k):
    f = make_field(*{8: (2, 3), 9: (3, 2)}.get(q, (q, 1)))
    scans = brute_distributions(rs_code(f, n, k), range(1, n + 2))
    for b, scan in scans.items():
        assert scan.mode == BRUTE_FORCE
        assert b_distribution(Q(q, n, k, b)).as_list() == scan.as_list(), b


def test_corollary_check_rs_6_4_11():
    checks = {c.name: c for c in corollary_check(Q(11, 6, 4, 3))}
    assert checks["minimum b-weight count n(q-1)"].expected == 60
    assert checks["full 3-weight count q^4-(d+3)q+d+2"].expected == 14580
    applicable = [c for c in checks.values() if c.applicable]
    assert applicable and all(c.passed for c in applicable)
    assert not checks["symbol-pair formula"].applicable
    assert str(checks["symbol-pair formula"]).startswith("SKIP")


def test_corollary_check_flags_wrong_distribution():
    query = Q(11, 6, 4, 3)
    good = b_distribution(query)
    counts = dict(good.counts)
    counts[5] += 1
    counts[6] -= 1
    bad = WeightDistribution(query, counts, CLOSED_FORM)
    failed = {c.name for c in corollary_check(query, bad) if c.applicable and not c.passed}
    assert failed == {
        "minimum b-weight count n(q-1)",
        "full 3-weight count q^4-(d+3)q+d+2",
        "full b-weight count for k = b+1",
    }


@pytest.mark.parametrize("q,n,k", [(7, 5, 2), (7, 6, 3), (11, 5, 3), (13, 8, 4)])
def test_corollary_check_pair_formula(q, n, k):
    checks = corollary_check(Q(q, n, k, 2))
    assert all(c.passed for c in checks if c.applicable)


@pytest.mark.parametrize("q,d,b", [(7, 3, 3), (11, 3, 4), (13, 4, 3), (13, 3, 5)])
def test_corollary_check_k_eq_b_plus_one(q, d, b):
    checks = corollary_check(Q(q, d + b, b + 1, b))
    named = {c.name: c for c in checks}
    assert named["full b-weight count for k = b+1"].passed


def test_distribution_json_roundtrip():
    dist = b_distribution(Q(11, 6, 4, 3))
    obj = dist.to_json()
    assert obj["counts"]["5"] == "60" and obj["total"] == "14641"
    assert obj["query"] == {"q": 11, "n": 6, "k": 4, "d": 3, "b": 3}
    assert WeightDistribution.from_json(obj) == dist
    assert dist.support() == [0, 5, 6]
    assert dist.diff(dist) == []


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 11, 13, 16, 25, 29]), st.integers(3, 30), st.data())
def test_structural_properties(q, n, data):
    # MDS codes of length above q + 1 need not exist, and the formulas go negative there
    n = min(n, q + 1)
    k = data.draw(st.integers(1, n - 1))
    b = data.draw(st.integers(1, n))
    dist = b_distribution(Q(q, n, k, b))
    d = n - k + 1
    assert dist.total == q**k
    assert all(c >= 0 for c in dist.as_list())
    if d + b - 1 <= n:
        assert min(w for w in dist.support() if w) == d + b - 1
