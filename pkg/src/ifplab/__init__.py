"""Exact computations with finite group actions on the plane and the quadric.

The subpackages are layered bottom-up:

    cyclotomic  exact arithmetic in Q(zeta_N), small matrices, eigendata
    groups      finite matrix groups, named constructors, the spec grammar
    classify    abelian-subgroup tests and clause labelling
    geometry    fixed loci, intersection configurations, the IFP verdict
    birational  cyclic quotient germs, Hirzebruch-Jung chains, discrepancies
    picard      intersection lattices, Lefschetz bookkeeping
    fpgroup     coset enumeration, Smith normal form, link groups
    cli         the ifp-lab command
"""

__version__ = "0.1.0"

__all__ = [
    "CycloNum",
    "Matrix",
    "cyclotomic_polynomial",
    "unity_eigendata",
    "build",
    "parse_group_spec",
    "decide_ifp_birational",
    "sigma_configuration",
]


def __getattr__(name):
    # keep the package importable without dragging every layer in at once
    if name in ("CycloNum", "Matrix", "cyclotomic_polynomial", "unity_eigendata"):
        from . import cyclotomic

        return getattr(cyclotomic, name)
    if name in ("build", "parse_group_spec"):
        from . import groups

        return getattr(groups, name)
    if name in ("decide_ifp_birational", "sigma_configuration"):
        from . import geometry

        return getattr(geometry, name)
    raise AttributeError(name)
