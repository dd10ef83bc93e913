"""Classification helpers: the abelian-subgroups-cyclic criterion against a
brute-force subgroup enumeration, clause labels, and the first-homology
closure check."""

import pytest

from ifplab.classify import (
    abelian_invariants,
    abelian_subgroups_cyclic,
    abelian_subgroups_cyclic_oracle,
    clause_label,
    coprime_factor_condition,
    h1_corollary_check,
)
from ifplab.groups import build, parse_group_spec

SMALL_SPECS = [
    "cyclic 12",
    "dihedral 8",
    "dihedral 12",
    "dicyclic 8",
    "dicyclic 12",
    "binary-tetrahedral",
    "binary-octahedral",
    "tetrahedral",
    "octahedral",
    "hessian-kernel",
    "hessian-c4",
    "imprimitive-c3 n=7 s=3",
    "product-f0 (cyclic 2) (cyclic 3)",
    "product-f0 (cyclic 2) (cyclic 2)",
    "diagonal-f0 (dihedral 10)",
    "g4n n=6",
    "g4n n=8",
    "explicit gl2 [-1,0;0,1] [1,0;0,-1]",
    "explicit p3 [z3,0,0;0,1,0;0,0,1] [1,0,0;0,z3,0;0,0,1]",
]


@pytest.mark.parametrize("text", SMALL_SPECS)
def test_abelian_subgroups_cyclic_matches_bruteforce(text):
    group = build(parse_group_spec(text))
    assert group.order <= 48
    assert abelian_subgroups_cyclic(group) == abelian_subgroups_cyclic_oracle(group)


def test_abelian_subgroups_cyclic_known_values():
    assert abelian_subgroups_cyclic(build(parse_group_spec("dicyclic 8")))
    assert abelian_subgroups_cyclic(build(parse_group_spec("cyclic 15")))
    assert not abelian_subgroups_cyclic(
        build(parse_group_spec("explicit gl2 [-1,0;0,1] [1,0;0,-1]"))
    )
    assert not abelian_subgroups_cyclic(build(parse_group_spec("dihedral 8")))


def test_coprime_factor_condition():
    assert coprime_factor_condition(
        build(parse_group_spec("product-f0 (cyclic 2) (cyclic 3)"))
    )
    assert not coprime_factor_condition(
        build(parse_group_spec("product-f0 (cyclic 2) (cyclic 2)"))
    )


@pytest.mark.parametrize(
    "text,clause",
    [
        ("dicyclic 8", 1),
        ("explicit gl2 [-1,0;0,1] [1,0;0,-1]", 0),
        ("product-f0 (cyclic 2) (cyclic 3)", 2),
        ("product-f0 (cyclic 2) (cyclic 2)", 0),
        ("imprimitive-c3 n=7 s=3", 3),
        ("g4n n=6", 4),
        ("hessian-kernel", 5),
        ("hessian-q8", 5),
        ("hessian-full", 0),
    ],
)
def test_clause_labels(text, clause):
    spec = parse_group_spec(text)
    assert clause_label(spec, build(spec)).clause == clause


@pytest.mark.parametrize(
    "factors,ok",
    [
        ([], True),
        ([5], True),
        ([12], True),
        ([3, 3], True),
        ([3, 6], True),
        ([2, 4], True),
        ([2, 6], True),
        ([2, 10], True),
        ([2, 2], True),
        ([2, 8], False),
        ([2, 12], False),
        ([4, 4], False),
        ([2, 2, 2], False),
        ([1, 3, 3], True),
    ],
)
def test_h1_corollary_check(factors, ok):
    assert h1_corollary_check(factors) == ok


@pytest.mark.parametrize(
    "text,factors",
    [
        ("cyclic 12", [12]),
        ("explicit gl2 [-1,0;0,1] [1,0;0,-1]", [2, 2]),
        ("explicit p3 [z3,0,0;0,1,0;0,0,1] [1,0,0;0,z3,0;0,0,1]", [3, 3]),
        ("product-f0 (cyclic 2) (cyclic 3)", [6]),
    ],
)
def test_abelian_invariants(text, factors):
    group = build(parse_group_spec(text))
    assert [int(d) for d in abelian_invariants(group) if int(d) != 1] == factors
