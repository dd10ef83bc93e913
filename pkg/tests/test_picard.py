"""Intersection lattices of the surface models, the trace identity for fixed
loci, and the nine-line contraction model's exact numbers."""

from fractions import Fraction

import pytest

from ifplab.geometry import sigma_configuration
from ifplab.groups import build, parse_group_spec
from ifplab.picard import (
    F0Model,
    P2Model,
    hessian_model_from_group,
    invariant_rank,
    lefschetz_check,
    pic_of,
    trace2,
)

LEFSCHETZ_SPECS = [
    "dicyclic 8",
    "explicit gl2 [-1,0;0,1] [1,0;0,-1]",
    "product-f0 (cyclic 2) (cyclic 3)",
    "diagonal-f0 (dihedral 10)",
    "g4n n=6",
    "tetrahedral",
]


@pytest.mark.parametrize("text", LEFSCHETZ_SPECS)
def test_lefschetz_identity(text):
    from ifplab.geometry import as_f0_group

    group = build(parse_group_spec(text))
    if group.kind == "proj2":
        group = as_f0_group(group)
    for g in group.nontrivial():
        assert lefschetz_check(g)


def test_p2_lattice_and_invariant_rank():
    group = build(parse_group_spec("imprimitive-c3 n=7 s=3"))
    lat = pic_of(P2Model(), group)
    assert lat.rank == 1
    assert lat.gram == ((1,),)
    assert lat.canonical == (-3,)
    assert invariant_rank(lat, group) == 1
    for g in group.nontrivial():
        assert trace2(lat, g) == 1


def test_f0_lattice_swap_action():
    group = build(parse_group_spec("g4n n=6"))
    lat = pic_of(F0Model(), group)
    assert lat.rank == 2
    assert lat.gram == ((0, 1), (1, 0))
    assert lat.canonical == (-2, -2)
    for g in group.elements:
        m = lat.action_of(g)
        expected = ((0, 1), (1, 0)) if g.swap else ((1, 0), (0, 1))
        assert tuple(tuple(r) for r in m) == expected
        assert trace2(lat, g) == (0 if g.swap else 2)
    assert invariant_rank(lat, group) == 1


def test_f0_invariant_rank_untwisted():
    group = build(parse_group_spec("product-f0 (cyclic 2) (cyclic 3)"))
    lat = pic_of(F0Model(), group)
    assert invariant_rank(lat, group) == 2


def test_lattice_pairing():
    group = build(parse_group_spec("product-f0 (cyclic 2) (cyclic 2)"))
    lat = pic_of(F0Model(), group)
    f1 = (1, 0)
    f2 = (0, 1)
    assert lat.pair(f1, f1) == 0
    assert lat.pair(f1, f2) == 1
    k = lat.canonical
    assert lat.pair(k, k) == 8


def test_nine_line_model_numbers():
    group = build(parse_group_spec("hessian-kernel"))
    model = hessian_model_from_group(group)
    assert model["rank"] == 13
    assert model["self_intersections"] == [-3] * 9
    assert model["discrepancies"] == [Fraction(1, 3)] * 9
    assert model["k_squared"] == 0
    assert model["numerically_trivial"] is True
    assert model["complement_rank"] == 4


def test_nine_line_model_matches_configuration():
    group = build(parse_group_spec("hessian-kernel"))
    config = sigma_configuration(group)
    assert len(config.curves) == 9
    assert len([p for p in config.points if len(p.curve_indices) >= 2]) == 12
