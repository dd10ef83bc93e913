"""Intersection lattices of P^2, P^1 x P^1, and their blow-ups at orbits
of points, with the induced group actions: traces, invariant ranks, the
topological fixed-point identity, and the nine-line contraction model's
canonical-class arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .birational import discrepancies
from .geometry import (
    Configuration,
    FixedLocus,
    GeometryError,
    euler_number,
    fixed_locus,
    matches_hessian_arrangement,
    sigma_configuration,
    surface_for,
    transform_point,
)
from .groups import FiniteGroup, Linear2, ProjEl, WreathEl


class PicardError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rational linear algebra helpers (dense, small)


def _rref(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pick = next((i for i, r in enumerate(rows) if r[col]), None)
        if pick is None:
            col += 1
            continue
        piv = rows.pop(pick)
        inv = 1 / piv[col]
        piv = [x * inv for x in piv]
        out.append(piv)
        for r in rows:
            c = r[col]
            if c:
                for j in range(ncols):
                    r[j] -= c * piv[j]
        col += 1
    return out


def _rank(rows) -> int:
    return len(_rref(rows))


def _kernel(rows):
    """Basis of the right kernel of a rational matrix (rows x cols)."""
    ncols = len(rows[0]) if rows else 0
    red = _rref(rows)
    pivots = []
    for r in red:
        for j in range(ncols):
            if r[j]:
                pivots.append(j)
                break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in zip(reversed(red), reversed(pivots)):
            vec[p] = -sum(r[j] * vec[j] for j in range(p + 1, ncols))
        basis.append(vec)
    return basis


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _transpose(a):
    return [list(col) for col in zip(*a)]


# ---------------------------------------------------------------------------
# the lattice


@dataclass(frozen=True)
class PicLattice:
    rank: int
    gram: tuple  # tuple of tuples of int
    canonical: tuple  # K as an integer vector
    actions: dict  # element key -> integer matrix (tuple of tuples)

    def action_of(self, el):
        return self.actions[el.key()]

    def pair(self, u, v) -> Fraction:
        return sum(
            Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )


def _validate_action(gram, canonical, mat):
    g = [list(r) for r in gram]
    m = [list(r) for r in mat]
    if _mat_mul(_transpose(m), _mat_mul(g, m)) != g:
        raise PicardError("action does not preserve the intersection form")
    k = [[x] for x in canonical]
    if _mat_mul(m, k) != k:
        raise PicardError("action does not preserve the canonical class")


# surface models


@dataclass(frozen=True)
class P2Model:
    tag = "P2"


@dataclass(frozen=True)
class F0Model:
    tag = "F0"


@dataclass(frozen=True)
class BlowUpModel:
    base: object
    centers: tuple  # geometry point objects, pairwise distinct

    tag = "BlowUp"


def _base_action(model, el):
    if model.tag == "P2":
        if not isinstance(el, ProjEl):
            raise PicardError("P2 lattice needs 3x3 projective elements")
        return [[1]]
    if model.tag == "F0":
        if not isinstance(el, WreathEl):
            raise PicardError("F0 lattice needs wreath elements")
        return [[0, 1], [1, 0]] if el.swap else [[1, 0], [0, 1]]
    raise PicardError(f"no base action on {model.tag}")


def pic_of(model, group: FiniteGroup) -> PicLattice:
    """The intersection lattice of the model with the action of `group`."""
    if model.tag == "P2":
        rank, gram, canonical = 1, ((1,),), (-3,)
        mats = {el.key(): ((1,),) for el in group.elements}
    elif model.tag == "F0":
        rank, gram, canonical = 2, ((0, 1), (1, 0)), (-2, -2)
        mats = {
            el.key(): tuple(tuple(r) for r in _base_action(model, el))
            for el in group.elements
        }
    elif model.tag == "BlowUp":
        base = pic_of(model.base, group)
        pts = list(model.centers)
        keys = [p.key() for p in pts]
        if len(set(keys)) != len(keys):
            raise PicardError("blow-up centers must be distinct")
        n = len(pts)
        rank = base.rank + n
        gram = [
            [base.gram[i][j] if i < base.rank and j < base.rank else 0 for j in range(rank)]
            for i in range(base.rank)
        ]
        for t in range(n):
            row = [0] * rank
            row[base.rank + t] = -1
            gram.append(row)
        gram = tuple(tuple(r) for r in gram)
        canonical = tuple(list(base.canonical) + [1] * n)
        mats = {}
        for el in group.elements:
            perm = []
            for p in pts:
                q = transform_point(el, p).key()
                try:
                    perm.append(keys.index(q))
                except ValueError:
                    raise PicardError("blow-up centers are not stable under the group")
            bm = base.actions[el.key()]
            mat = [[0] * rank for _ in range(rank)]
            for i in range(base.rank):
                for j in range(base.rank):
                    mat[i][j] = bm[i][j]
            for t in range(n):
                mat[base.rank + perm[t]][base.rank + t] = 1
            mats[el.key()] = tuple(tuple(r) for r in mat)
    else:
        raise PicardError(f"unknown surface model {model!r}")

    for mat in mats.values():
        _validate_action(gram, canonical, mat)
    return PicLattice(rank, gram, canonical, mats)


def trace2(lattice: PicLattice, el) -> int:
    mat = lattice.action_of(el)
    return sum(mat[i][i] for i in range(lattice.rank))


def invariant_rank(lattice: PicLattice, group: FiniteGroup) -> int:
    """Rank of the invariant sublattice, computed by trace averaging and by
    the fixed subspace; the two must agree."""
    total = sum(trace2(lattice, el) for el in group.elements)
    avg = Fraction(total, group.order)
    if avg.denominator != 1:
        raise PicardError("representation inconsistency: averaged trace not an integer")
    rows = []
    for gen in group.generators:
        mat = lattice.action_of(gen)
        for i in range(lattice.rank):
            rows.append(
                [mat[i][j] - (1 if i == j else 0) for j in range(lattice.rank)]
            )
    fixed = lattice.rank - _rank(rows) if rows else lattice.rank
    if fixed != avg:
        raise PicardError(
            f"representation inconsistency: averaging gives {avg}, fixed subspace {fixed}"
        )
    return fixed


# ---------------------------------------------------------------------------
# the fixed-point identity


def _trace2_of_element(el) -> int:
    if isinstance(el, ProjEl):
        return 1
    if isinstance(el, WreathEl):
        return 0 if el.swap else 2
    if isinstance(el, Linear2):
        # on the blow-up of P^2 at the origin both the hyperplane and the
        # exceptional class are preserved
        return 2
    raise PicardError(f"no second-cohomology trace for {el!r}")


def lefschetz_check(el, surface: str | None = None) -> bool:
    """First cohomology vanishes on rational surfaces, so the Euler number
    of the fixed locus must equal 2 + the second-cohomology trace."""
    if surface is None:
        surface = surface_for(el.kind)
    locus = fixed_locus(el, surface)
    return euler_number(locus) == 2 + _trace2_of_element(el)


# ---------------------------------------------------------------------------
# the nine-line contraction model


def hessian_model_canonical(config: Configuration, group: FiniteGroup):
    """Blow up the twelve triple points of the nine-line arrangement and
    form D = K + sum(a_i * L_i) with each L_i the strict transform of a
    line and a_i its discrepancy.  Returns the model's numerical data."""
    if not matches_hessian_arrangement(config):
        raise PicardError("configuration is not the nine-line, twelve-point arrangement")
    points = [p for p in config.points if len(p.curve_indices) >= 2]
    model = BlowUpModel(P2Model(), tuple(p.point for p in points))
    lattice = pic_of(model, group)
    nlines = len(config.curves)

    strict = []
    for i in range(nlines):
        vec = [0] * lattice.rank
        vec[0] = 1
        incident = [t for t, p in enumerate(points) if i in p.curve_indices]
        if len(incident) != 4:
            raise PicardError("a line is not incident to exactly four centers")
        for t in incident:
            vec[1 + t] = -1
        strict.append(vec)

    self_ints = [lattice.pair(v, v) for v in strict]
    for i in range(nlines):
        for j in range(i + 1, nlines):
            if lattice.pair(strict[i], strict[j]) != 0:
                raise PicardError("strict transforms of the lines are not disjoint")

    # each contracted curve is a single chain of its own
    discs = [discrepancies([int(s)])[0] for s in self_ints]

    d_vec = [Fraction(k) for k in lattice.canonical]
    for a, v in zip(discs, strict):
        for t in range(lattice.rank):
            d_vec[t] += a * v[t]
    k_sq = lattice.pair(d_vec, d_vec)

    # orthogonal complement of the contracted classes
    rows = []
    for v in strict:
        rows.append(
            [
                sum(Fraction(v[i]) * lattice.gram[i][j] for i in range(lattice.rank))
                for j in range(lattice.rank)
            ]
        )
    complement = _kernel(rows)
    trivial = all(lattice.pair(d_vec, b) == 0 for b in complement)

    return {
        "rank": lattice.rank,
        "self_intersections": [int(s) for s in self_ints],
        "discrepancies": discs,
        "k_squared": k_sq,
        "numerically_trivial": trivial,
        "complement_rank": len(complement),
    }


def hessian_model_from_group(group: FiniteGroup):
    config = sigma_configuration(group)
    return hessian_model_canonical(config, group)
