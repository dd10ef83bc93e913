"""Cyclic quotient germs: Hirzebruch-Jung expansions, blow-ups, separation
exponents, and discrepancies — all verified against direct recomputation."""

from fractions import Fraction
from math import gcd

import pytest

from ifplab.birational import (
    Germ,
    blowup_germ,
    discrepancies,
    hj_contract,
    hj_expand,
    intersection_matrix,
    is_negative_definite,
    normalize_germ,
    resolve_germ,
    separation_exponent,
)


def test_hj_round_trip_up_to_50():
    for r in range(2, 51):
        for a in range(1, r):
            if gcd(r, a) != 1:
                continue
            chain = hj_expand(r, a)
            assert all(b >= 2 for b in chain)
            assert hj_contract(chain) == (r, a)


def test_hj_expand_evaluates_to_r_over_a():
    # independent recomputation: evaluate the continued fraction directly
    for r, a in [(5, 2), (7, 3), (11, 4), (30, 7), (49, 48)]:
        chain = hj_expand(r, a)
        x = Fraction(chain[-1])
        for b in reversed(chain[:-1]):
            x = b - 1 / x
        assert x == Fraction(r, a)


def test_discrepancy_range_and_zero_characterization():
    for r in range(2, 31):
        for a in range(1, r):
            if gcd(r, a) != 1:
                continue
            res = resolve_germ(r, a)
            ds = res["discrepancies"]
            assert all(0 <= d < 1 for d in ds)
            all_minus_two = all(s == -2 for s in res["self_intersections"])
            assert (all(d == 0 for d in ds)) == all_minus_two


def test_known_resolutions():
    assert resolve_germ(4, 1)["chain"] == [4]
    assert resolve_germ(4, 3)["chain"] == [2, 2, 2]
    res = resolve_germ(7, 3)
    assert res["chain"] == [3, 2, 2]
    assert res["discrepancies"] == [Fraction(3, 7), Fraction(2, 7), Fraction(1, 7)]


def test_chain_intersection_matrix_negative_definite():
    for r, a in [(5, 2), (9, 4), (12, 5)]:
        m = intersection_matrix(resolve_germ(r, a)["self_intersections"])
        assert is_negative_definite(m)
    assert not is_negative_definite(intersection_matrix([0, -2]))


def test_germ_normalization_and_faithful():
    g = Germ(6, 2, 4)
    f = g.faithful()
    assert f.r < 6 and f.is_faithful()
    n = normalize_germ(Germ(7, 3, 1))
    assert n.p == 1 and gcd(n.r, 1) == 1
    assert Germ(5, 1, 2).is_isolated()
    assert not Germ(4, 0, 1).is_isolated()


def test_blowup_germ_weights():
    g1, g2 = blowup_germ(Germ(7, 1, 3))
    assert (g1.r, g1.p, g1.q) == (7, 1, 2)
    assert (g2.r, g2.p, g2.q) == (7, 5, 3)
    # blowing up an isolated germ of the form 1/r(1, r-1) separates at once
    h1, h2 = blowup_germ(Germ(5, 1, 4))
    assert h1.q == 3 and h2.p == 2


def test_separation_exponent_definition_and_minimality():
    for r in range(2, 101, 7):
        for p in range(1, r):
            if gcd(r, p) != 1:
                continue
            for q in (1, 2, r - 1):
                g = Germ(r, p, q).faithful()
                if gcd(g.r, g.p) != 1:
                    continue
                t = separation_exponent(g)
                assert gcd(g.r, (t + 1) * g.p - g.q) == 1
                for s in range(t):
                    assert gcd(g.r, (s + 1) * g.p - g.q) != 1


@pytest.mark.parametrize(
    "bad",
    [lambda: hj_expand(6, 2), lambda: hj_expand(5, 5), lambda: hj_contract([1, 2])],
)
def test_invalid_inputs_rejected(bad):
    with pytest.raises(ValueError):
        bad()
