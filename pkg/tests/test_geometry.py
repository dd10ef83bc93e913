"""Fixed loci, the configuration of pointwise-fixed curves, and the verdict
procedure: structural examples, equivariance, and witness re-validation."""

import random

import pytest

from ifplab.cyclotomic import CycloNum, Matrix
from ifplab.geometry import (
    GeometryError,
    GraphCurve,
    _work_conductor,
    as_f0_group,
    arrangement_stats,
    criterion_cycle,
    cycstab_check,
    decide_ifp_birational,
    element_fixes_curve_pointwise,
    element_fixes_point,
    euler_number,
    fixed_locus,
    matches_hessian_arrangement,
    sigma_configuration,
    surface_for,
    transform_curve,
    transform_point,
)
from ifplab.groups import ProjEl, WreathEl, build, parse_group_spec


def _p3(entries):
    return ProjEl(Matrix(entries))


def test_plane_fixed_locus_double_eigenvalue():
    # diag(z3, 1, 1): eigenvalue 1 has a 2-dimensional eigenspace, so the
    # fixed locus is the line {x = 0} plus the isolated point (1:0:0)
    g = _p3([[CycloNum.zeta(3), 0, 0], [0, 1, 0], [0, 0, 1]])
    locus = fixed_locus(g, "P2")
    assert len(locus.curves) == 1 and len(locus.isolated_points) == 1
    line = locus.curves[0]
    pt = locus.isolated_points[0]
    assert line.contains(pt.coords) is False
    assert euler_number(locus) == 3


def test_plane_fixed_locus_three_simple_eigenvalues():
    g = _p3([[1, 0, 0], [0, CycloNum.zeta(5), 0], [0, 0, CycloNum.zeta(5, 2)]])
    locus = fixed_locus(g, "P2")
    assert len(locus.curves) == 0 and len(locus.isolated_points) == 3
    assert euler_number(locus) == 3


def test_quadric_fixed_locus_untwisted():
    i2 = Matrix.identity(2)
    neg = Matrix.diagonal([-1, 1])
    # scalar in one factor: two fibers of the other ruling
    g = WreathEl(neg, i2, False)
    locus = fixed_locus(g, "F0")
    assert len(locus.curves) == 2 and not locus.isolated_points
    # nonscalar in both factors: four isolated points
    h = WreathEl(neg, neg, False)
    locus = fixed_locus(h, "F0")
    assert not locus.curves and len(locus.isolated_points) == 4
    assert euler_number(locus) == 4


def test_quadric_fixed_locus_twisted():
    i2 = Matrix.identity(2)
    # swap with a * b scalar: the fixed locus is a graph curve
    g = WreathEl(i2, i2, True)
    locus = fixed_locus(g, "F0")
    assert len(locus.curves) == 1 and isinstance(locus.curves[0], GraphCurve)
    # swap with a * b nonscalar: two isolated fixed points
    h = WreathEl(Matrix.diagonal([CycloNum.zeta(3), 1]), i2, True)
    locus = fixed_locus(h, "F0")
    assert not locus.curves and len(locus.isolated_points) == 2


def test_identity_has_no_meaningful_fixed_locus():
    with pytest.raises(GeometryError):
        fixed_locus(_p3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), "P2")


def test_fixed_locus_points_are_fixed():
    group = build(parse_group_spec("imprimitive-c3 n=7 s=3"))
    for g in group.nontrivial():
        locus = fixed_locus(g, "P2")
        for pt in locus.isolated_points:
            assert element_fixes_point(g, pt)
        for c in locus.curves:
            assert element_fixes_curve_pointwise(g, c)


def test_fixed_locus_equivariance():
    group = build(parse_group_spec("hessian-c4"))
    conductor = _work_conductor(group)
    rng = random.Random(11)
    els = group.nontrivial()
    for _ in range(6):
        g = rng.choice(els)
        h = rng.choice(els)
        conj = h.mul(g).mul(h.inverse())
        if conj.is_identity():
            continue
        left = fixed_locus(conj, "P2", conductor)
        right = fixed_locus(g, "P2", conductor)
        lk = {transform_point(h, p).key() for p in right.isolated_points}
        assert {p.key() for p in left.isolated_points} == lk
        ck = {transform_curve(h, c).key() for c in right.curves}
        assert {c.key() for c in left.curves} == ck


def test_surface_assignment():
    assert surface_for("proj3") == "P2"
    assert surface_for("wreath") == "F0"
    assert surface_for("linear2") == "RULED"


def test_diagonal_quadric_embedding():
    group = build(parse_group_spec("tetrahedral"))
    emb = as_f0_group(group)
    assert emb.kind == "wreath"
    assert emb.order == group.order
    assert not any(e.swap for e in emb.elements)


def test_configuration_incidence_consistency():
    group = build(parse_group_spec("product-f0 (cyclic 2) (cyclic 3)"))
    config = sigma_configuration(group)
    assert config.surface == "F0"
    for pnode in config.points:
        assert len(pnode.curve_indices) >= 2
        for g in pnode.stabilizer:
            assert g.is_identity() or element_fixes_point(g, pnode.point)
    for cnode in config.curves:
        for g in cnode.stabilizer:
            assert g.is_identity() or element_fixes_curve_pointwise(g, cnode.curve)


def test_cycle_witness_revalidates():
    group = build(parse_group_spec("product-f0 (cyclic 2) (cyclic 2)"))
    config = sigma_configuration(group)
    witness = criterion_cycle(config, group)
    assert witness is not None
    k = len(witness.curve_indices)
    assert k >= 2 and len(witness.point_indices) == k
    assert len(set(witness.point_indices)) == k
    for i in range(k):
        c_here = witness.curve_indices[i]
        c_next = witness.curve_indices[(i + 1) % k]
        pnode = config.points[witness.point_indices[i]]
        assert c_here in pnode.curve_indices and c_next in pnode.curve_indices
        g = witness.elements[i]
        assert any(g.key() == s.key() for s in config.curves[c_here].stabilizer)
        assert not g.is_identity()


def test_chain_criterion_positive_case():
    group = build(parse_group_spec("dicyclic 8"))
    config = sigma_configuration(group)
    assert criterion_cycle(config, group) is None
    ok, _ = cycstab_check(config, group)
    assert ok


def test_hessian_arrangement_statistics():
    group = build(parse_group_spec("hessian-kernel"))
    config = sigma_configuration(group)
    assert arrangement_stats(config) == (9, 12, 4, 3)
    assert matches_hessian_arrangement(config)
    other = sigma_configuration(build(parse_group_spec("dicyclic 8")))
    assert not matches_hessian_arrangement(other)


FAST_VERDICTS = [
    ("dicyclic 8", "ifp-birational"),
    ("explicit gl2 [-1,0;0,1] [1,0;0,-1]", "not-ifp-birational"),
    ("product-f0 (cyclic 2) (cyclic 3)", "ifp-birational"),
    ("product-f0 (cyclic 2) (cyclic 2)", "not-ifp-birational"),
    ("diagonal-f0 (dihedral 10)", "ifp-birational"),
    ("explicit p3 [z3,0,0;0,1,0;0,0,1] [1,0,0;0,z3,0;0,0,1]", "not-ifp-birational"),
]


@pytest.mark.parametrize("text,expected", FAST_VERDICTS)
def test_fast_verdicts(text, expected):
    verdict = decide_ifp_birational(parse_group_spec(text))
    assert verdict.status == expected
    if expected == "not-ifp-birational":
        assert verdict.witness is not None
