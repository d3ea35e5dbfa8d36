import itertools
from math import comb

import numpy as np
import pytest

from mcbounds.hilbert import (
    EmptyDefiningSet,
    ExceedsPolynomialRing,
    HilbertFunction,
    InternalZero,
    LeadingTermNotOne,
    MacaulayGrowthViolation,
    NegativeEntry,
    enumerate_gorenstein_h,
    initial_degree,
    is_o_sequence,
    is_symmetric,
    macaulay_bound,
    macaulay_expansion,
    multiplicity,
    sum_third_difference,
    third_difference,
    validate_hilbert,
    zanello_invariants,
)

PAPER_H = (1, 3, 6, 6, 3, 1)


def H(*vals):
    return validate_hilbert(vals)


def monomials(nvars, degree):
    return sorted(
        (e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree), reverse=True
    )


def lex_growth(a, i, nvars=3):
    """Brute force: keep the last ``a`` lex monomials of degree i, count degree i+1 survivors."""
    deg_i = monomials(nvars, i)
    ideal = set(deg_i[: len(deg_i) - a])
    count = 0
    for mono in monomials(nvars, i + 1):
        divisors = {tuple(m - (k == j) for k, m in enumerate(mono)) for j in range(nvars) if mono[j]}
        if not divisors & ideal:
            count += 1
    return count


@pytest.mark.parametrize("i", range(1, 6))
def test_macaulay_bound_matches_lex_segments(i):
    for a in range(1, comb(i + 2, 2) + 1):
        assert macaulay_bound(a, i) == lex_growth(a, i), (a, i)


@pytest.mark.parametrize("a,i", [(1, 1), (5, 2), (20, 3), (100, 4), (7, 7)])
def test_macaulay_expansion_shape(a, i):
    terms = macaulay_expansion(a, i)
    assert sum(comb(top, k) for top, k in terms) == a
    tops = [top for top, _ in terms]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
    assert all(top >= k >= 1 for top, k in terms)


def test_macaulay_expansion_known():
    # 5 = C(3,2) + C(2,1)
    assert macaulay_expansion(5, 2) == [(3, 2), (2, 1)]
    assert macaulay_bound(5, 2) == comb(4, 3) + comb(3, 2)


def test_validate_examples():
    h = H(*PAPER_H)
    assert h.socle_degree == 5
    assert H(1).socle_degree == 0
    assert H(1).has_linear_forms
    assert not h.has_linear_forms
    assert H(1, 3, 3, 1, 0, 0).values == (1, 3, 3, 1)


@pytest.mark.parametrize(
    "raw,exc,degree",
    [
        ((1, 3, 7), ExceedsPolynomialRing, 2),
        ((2, 3), LeadingTermNotOne, 0),
        ((1, -1), NegativeEntry, 1),
        ((1, 3, 0, 1), InternalZero, 2),
        ((1, 1, 2), MacaulayGrowthViolation, 2),
        ((1, 2, 3, 5), MacaulayGrowthViolation, 3),
        ((1, 4), ExceedsPolynomialRing, 1),
    ],
)
def test_validate_rejections(raw, exc, degree):
    with pytest.raises(exc) as info:
        validate_hilbert(raw)
    assert info.value.degree == degree


def test_parse_and_serialize():
    h = HilbertFunction.parse(" 1, 3,6 ,6,3, 1 ")
    assert h.values == PAPER_H
    assert str(h) == "1,3,6,6,3,1"
    assert HilbertFunction.parse(str(h)) == h


@pytest.mark.parametrize(
    "h,expected",
    [
        (PAPER_H, (1, 0, 0, -4, 0, 4, 0, 0, -1)),
        ((1,), (1, -3, 3, -1)),
        ((1, 3, 3, 1), (1, 0, -3, 0, 3, 0, -1)),
    ],
)
def test_third_difference(h, expected):
    assert third_difference(H(*h)) == expected
    # independent route: multiply the h-polynomial by (1 - x)^3
    assert tuple(np.convolve(h, [1, -3, 3, -1]).tolist()) == expected


def test_third_difference_roundtrip():
    h = H(*PAPER_H)
    back = sum_third_difference(third_difference(h))
    assert tuple(back[:6]) == PAPER_H and not any(back[6:])


@pytest.mark.parametrize("h,e", [(PAPER_H, 20), ((1,), 1), ((1, 3, 3, 1), 8)])
def test_multiplicity(h, e):
    assert multiplicity(H(*h)) == e


@pytest.mark.parametrize("h,m1", [(PAPER_H, 3), ((1,), 1), ((1, 3, 3, 1), 2), ((1, 3, 6, 10, 5), 4)])
def test_initial_degree(h, m1):
    assert initial_degree(H(*h)) == m1


@pytest.mark.parametrize(
    "h,invariants",
    [(PAPER_H, (3, 5, 3, 5)), ((1,), (1, 2, 1, 2)), ((1, 3, 3, 1), (2, 4, 2, 4))],
)
def test_zanello_invariants(h, invariants):
    z = zanello_invariants(H(*h))
    assert z.as_tuple() == invariants
    assert z.socle_shift == len(h) + 2


def test_n1_cap_is_literal():
    # negatives at 4, 6 = c+2 and 7 = c+3; only t <= c+1 counts
    h = H(1, 3, 6, 10, 1)
    assert third_difference(h) == (1, 0, 0, 0, -14, 21, -7, -1)
    assert zanello_invariants(h).N1 == 4


def test_empty_defining_set_message():
    err = EmptyDefiningSet("n2")
    assert err.which == "n2" and "n2" in str(err)


@pytest.mark.parametrize("h,sym", [(PAPER_H, True), ((1, 3, 3, 1), True), ((1, 3, 4), False), ((1,), True)])
def test_is_symmetric(h, sym):
    assert is_symmetric(H(*h)) is sym


def two_variable_o_sequence(g):
    """Growth in at most two variables: g_{t+1} <= g_t + 1 while full, nonincreasing afterwards."""
    if g[0] != 1 or (len(g) > 1 and not 0 <= g[1] <= 2):
        return False
    for t in range(1, len(g) - 1):
        limit = t + 2 if g[t] == t + 1 else g[t]
        if not 0 <= g[t + 1] <= limit:
            return False
    return True


def brute_force_gorenstein(max_c):
    out = []
    for c in range(max_c + 1):
        half = c // 2
        for first in itertools.product(*[range(1, comb(t + 2, 2) + 1) for t in range(half + 1)]):
            if first[0] != 1:
                continue
            values = first + first[: c + 1 - len(first)][::-1]
            diffs = [values[t] - (values[t - 1] if t else 0) for t in range(half + 1)]
            if two_variable_o_sequence(diffs):
                out.append(values)
    return sorted(out)


@pytest.mark.parametrize("max_c", [0, 2, 5, 7])
def test_enumeration_matches_brute_force(max_c):
    got = [h.values for h in enumerate_gorenstein_h(max_c)]
    assert got == brute_force_gorenstein(max_c)


def test_enumeration_examples():
    assert [h.values for h in enumerate_gorenstein_h(0)] == [(1,)]
    small = {h.values for h in enumerate_gorenstein_h(2)}
    assert {(1, 1, 1), (1, 2, 1), (1, 3, 1)} <= small
    assert small == {(1,), (1, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)}
    assert PAPER_H in {h.values for h in enumerate_gorenstein_h(5)}


def test_enumeration_is_sorted_and_symmetric():
    hs = [h.values for h in enumerate_gorenstein_h(9)]
    assert hs == sorted(hs) and len(set(hs)) == len(hs)
    assert all(h == h[::-1] for h in hs)


def test_enumeration_max_entry():
    hs = list(enumerate_gorenstein_h(8, max_entry=3))
    assert hs and all(max(h.values) <= 3 for h in hs)


def test_filter_free_mode_is_a_superset():
    si = {h.values for h in enumerate_gorenstein_h(6)}
    free = {h.values for h in enumerate_gorenstein_h(6, si_filter=False)}
    assert si < free
    # symmetric O-sequence whose first difference is not an O-sequence
    assert (1, 3, 3, 4, 3, 3, 1) not in si
    assert (1, 3, 3, 4, 3, 3, 1) in free


def test_is_o_sequence():
    assert is_o_sequence([1, 2, 3, 4])
    assert is_o_sequence([1, 2, 1, 0])
    assert not is_o_sequence([1, 1, 2])
    assert not is_o_sequence([0])
