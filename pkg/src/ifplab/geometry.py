"""Fixed loci and the curve configuration that decides whether a finite
action on P^2, on P^1 x P^1, or on the blown-up ruled model of a linear
GL2 action can be made to have only isolated fixed points after a
birational change of model.

The decision procedure:
  1. build the configuration of curves fixed pointwise by nontrivial
     elements, with stabilizers at curves and intersection points;
  2. search for a cycle of curves whose consecutive stabilizer pairs
     generate noncyclic abelian subgroups -- a witness of impossibility;
  3. otherwise try the chain criterion (separate cyclic-stabilizer points
     on curves that meet others at most twice; what remains must be
     disjoint simple chains) -- a certificate of possibility;
  4. on P^2, fall back to the special model that blows up the twelve
     triple points of a nine-line arrangement and contracts the lines.
The procedure is sound but not complete: anything else is "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cyclotomic import CycloNum, Matrix, eigenspace, linear_order, unity_eigendata
from .groups import (
    FiniteGroup,
    GroupSpec,
    Linear2,
    ProjEl,
    WreathEl,
    build,
    close_under_multiplication,
    generated_subgroup,
    identity_like,
    is_abelian_set,
    is_cyclic_set,
)


class GeometryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# vector helpers


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _canon_vec(vec, conductor: int | None = None):
    """Scale a projective coordinate vector so its first nonzero entry is 1,
    optionally coercing to a common cyclotomic conductor for hashing."""
    vec = tuple(vec)
    lead = next((e for e in vec if not e.is_zero()), None)
    if lead is None:
        raise GeometryError("zero vector is not a projective point")
    inv = lead.inverse()
    out = tuple(e * inv for e in vec)
    if conductor is not None:
        out = tuple(e.coerce(conductor) for e in out)
    return out


def _parallel(u, v) -> bool:
    k = len(u)
    return all(
        (u[i] * v[j] - u[j] * v[i]).is_zero() for i in range(k) for j in range(i + 1, k)
    )


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), CycloNum.zero())


def _plane_basis(dual):
    """Two independent vectors spanning the plane {x : dual . x = 0}."""
    basis = []
    for i in range(3):
        if not dual[i].is_zero():
            pivot = i
            break
    inv = dual[pivot].inverse()
    for j in range(3):
        if j == pivot:
            continue
        vec = [CycloNum.zero()] * 3
        vec[j] = CycloNum.one()
        vec[pivot] = -dual[j] * inv
        basis.append(tuple(vec))
    return basis


_order_cache: dict = {}


def _linear_order(m: Matrix) -> int:
    key = m.entries_key()
    if key not in _order_cache:
        _order_cache[key] = linear_order(m)
    return _order_cache[key]


def _eigen_directions(m: Matrix):
    """(eigenvalue, list of eigenvectors) pairs of a finite-order matrix."""
    order = _linear_order(m)
    return [(lam, eigenspace(m, lam)) for lam, _dim in unity_eigendata(m, order)]


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class P2Point:
    coords: tuple  # canonical homogeneous coordinates, length 3

    @staticmethod
    def of(vec, conductor=None):
        return P2Point(_canon_vec(vec, conductor))

    def key(self):
        return ("p2", self.coords)

    def text(self):
        return "(" + ", ".join(repr(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class F0Point:
    x: tuple  # canonical coordinates on the first factor, length 2
    y: tuple

    @staticmethod
    def of(x, y, conductor=None):
        return F0Point(_canon_vec(x, conductor), _canon_vec(y, conductor))

    def key(self):
        return ("f0", self.x, self.y)

    def text(self):
        fmt = lambda v: "(" + ", ".join(repr(c) for c in v) + ")"
        return fmt(self.x) + " x " + fmt(self.y)


@dataclass(frozen=True)
class RuledPoint:
    """A point of the blown-up ruled model: the meeting of the fiber over a
    base direction with the exceptional section ("E") or the section at
    infinity ("Ep")."""

    section: str  # "E" | "Ep"
    direction: tuple  # canonical base direction, length 2

    @staticmethod
    def of(section, vec, conductor=None):
        return RuledPoint(section, _canon_vec(vec, conductor))

    def key(self):
        return ("ruled", self.section, self.direction)

    def text(self):
        return f"{self.section} over (" + ", ".join(repr(c) for c in self.direction) + ")"


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class Line:
    """A line in P^2 given by dual (covector) coordinates."""

    dual: tuple  # canonical, length 3

    self_intersection = 1

    @staticmethod
    def of(dual, conductor=None):
        return Line(_canon_vec(dual, conductor))

    def key(self):
        return ("line", self.dual)

    def contains(self, pt) -> bool:
        return isinstance(pt, P2Point) and _dot(self.dual, pt.coords).is_zero()

    def sample_points(self):
        v1, v2 = _plane_basis(self.dual)
        v3 = tuple(a + b for a, b in zip(v1, v2))
        return [P2Point.of(v) for v in (v1, v2, v3)]

    def text(self):
        return "line " + "(" + ", ".join(repr(c) for c in self.dual) + ")"


@dataclass(frozen=True)
class FiberFirst:
    """{base} x P^1 inside P^1 x P^1 (a fiber of the first projection)."""

    base: tuple  # canonical, length 2

    self_intersection = 0

    @staticmethod
    def of(base, conductor=None):
        return FiberFirst(_canon_vec(base, conductor))

    def key(self):
        return ("fiber1", self.base)

    def contains(self, pt) -> bool:
        return isinstance(pt, F0Point) and _parallel(pt.x, self.base)

    def sample_points(self):
        one, zero = CycloNum.one(), CycloNum.zero()
        return [F0Point.of(self.base, y) for y in ((one, zero), (zero, one), (one, one))]

    def text(self):
        return "fiber1 (" + ", ".join(repr(c) for c in self.base) + ")"


@dataclass(frozen=True)
class FiberSecond:
    """P^1 x {base} inside P^1 x P^1 (a fiber of the second projection)."""

    base: tuple

    self_intersection = 0

    @staticmethod
    def of(base, conductor=None):
        return FiberSecond(_canon_vec(base, conductor))

    def key(self):
        return ("fiber2", self.base)

    def contains(self, pt) -> bool:
        return isinstance(pt, F0Point) and _parallel(pt.y, self.base)

    def sample_points(self):
        one, zero = CycloNum.one(), CycloNum.zero()
        return [F0Point.of(x, self.base) for x in ((one, zero), (zero, one), (one, one))]

    def text(self):
        return "fiber2 (" + ", ".join(repr(c) for c in self.base) + ")"


@dataclass(frozen=True)
class GraphCurve:
    """The curve {(h y, y)} in P^1 x P^1; `h` is a projectively canonical
    2x2 matrix, `lift` a finite-order representative used for arithmetic."""

    h: Matrix
    lift: Matrix = field(compare=False, hash=False, repr=False)

    self_intersection = 2

    @staticmethod
    def of(lift, conductor=None):
        m = lift.coerce(conductor) if conductor is not None else lift
        return GraphCurve(m.scalar_canonical(), m)

    def key(self):
        return ("graph", self.h.entries_key())

    def contains(self, pt) -> bool:
        return isinstance(pt, F0Point) and _parallel(self.lift.apply(list(pt.y)), pt.x)

    def sample_points(self):
        one, zero = CycloNum.one(), CycloNum.zero()
        out = []
        for y in ((one, zero), (zero, one), (one, one)):
            out.append(F0Point.of(tuple(self.lift.apply(list(y))), y))
        return out

    def text(self):
        return f"graph of {self.h!r}"


@dataclass(frozen=True)
class RuledSection:
    """The exceptional section E (self-intersection -1) or the section at
    infinity E' (self-intersection +1) of the blown-up ruled model."""

    name: str  # "E" | "Ep"

    @property
    def self_intersection(self):
        return -1 if self.name == "E" else 1

    def key(self):
        return ("section", self.name)

    def contains(self, pt) -> bool:
        return isinstance(pt, RuledPoint) and pt.section == self.name

    def sample_points(self):
        return []

    def text(self):
        return "section " + self.name


@dataclass(frozen=True)
class RuledFiber:
    """The strict transform of the line through the origin in a fixed base
    direction, on the blown-up ruled model."""

    direction: tuple

    self_intersection = 0

    @staticmethod
    def of(vec, conductor=None):
        return RuledFiber(_canon_vec(vec, conductor))

    def key(self):
        return ("ruled-fiber", self.direction)

    def contains(self, pt) -> bool:
        return isinstance(pt, RuledPoint) and _parallel(pt.direction, self.direction)

    def sample_points(self):
        return []

    def text(self):
        return "ruled fiber (" + ", ".join(repr(c) for c in self.direction) + ")"


# ---------------------------------------------------------------------------
# fixed loci


@dataclass(frozen=True)
class FixedLocus:
    curves: tuple
    isolated_points: tuple


def surface_for(group_or_kind) -> str:
    kind = group_or_kind if isinstance(group_or_kind, str) else group_or_kind.kind
    return {"proj3": "P2", "wreath": "F0", "proj2": "F0", "linear2": "RULED"}[kind]


def as_f0_group(group: FiniteGroup) -> FiniteGroup:
    """Embed a projective 2x2 group diagonally into P^1 x P^1."""
    if group.kind == "wreath":
        return group
    if group.kind != "proj2":
        raise GeometryError("only 2x2 projective groups embed diagonally")
    gens = [WreathEl(g.lift, g.lift, False) for g in group.generators]
    elements, index = close_under_multiplication(gens, cap=4 * group.order + 4)
    return FiniteGroup(group.spec, "wreath", group.conductor, gens, elements, index)


def fixed_locus(g, surface: str | None = None, conductor: int | None = None) -> FixedLocus:
    """Curves fixed pointwise by g plus its isolated fixed points."""
    if g.is_identity():
        raise GeometryError("fixed locus is everything")
    if surface is None:
        surface = surface_for(g.kind)

    if surface == "P2":
        if g.kind != "proj3":
            raise GeometryError("P2 needs a 3x3 projective element")
        curves, points = [], []
        for _lam, vecs in _eigen_directions(g.lift):
            if len(vecs) == 2:
                curves.append(Line.of(_cross(vecs[0], vecs[1]), conductor))
            elif len(vecs) == 1:
                points.append(P2Point.of(vecs[0], conductor))
            else:  # pragma: no cover - a 3-dim eigenspace means g is trivial
                raise GeometryError("scalar element has no isolated fixed locus")
        if curves:
            # the double-eigenvalue point is isolated, the simple one lies
            # on the fixed line only when the eigenvalues coincide -- they
            # do not, so both lists are already disjoint
            pass
        return FixedLocus(tuple(curves), tuple(points))

    if surface == "F0":
        if g.kind != "wreath":
            raise GeometryError("P1 x P1 needs a wreath element")
        if not g.swap:
            a_triv, b_triv = g.a.is_scalar(), g.b.is_scalar()
            if a_triv and b_triv:
                raise GeometryError("fixed locus is everything")
            if a_triv:
                curves = [
                    FiberSecond.of(v, conductor)
                    for _lam, vecs in _eigen_directions(g.b)
                    for v in vecs
                ]
                return FixedLocus(tuple(curves), ())
            if b_triv:
                curves = [
                    FiberFirst.of(v, conductor)
                    for _lam, vecs in _eigen_directions(g.a)
                    for v in vecs
                ]
                return FixedLocus(tuple(curves), ())
            xs = [v for _lam, vecs in _eigen_directions(g.a) for v in vecs]
            ys = [v for _lam, vecs in _eigen_directions(g.b) for v in vecs]
            pts = tuple(F0Point.of(x, y, conductor) for x in xs for y in ys)
            return FixedLocus((), pts)
        # twisted: (x, y) -> (a y, b x)
        ab = g.a * g.b
        if ab.is_scalar():
            return FixedLocus((GraphCurve.of(g.a, conductor),), ())
        pts = []
        for _lam, vecs in _eigen_directions(ab):
            for x in vecs:
                pts.append(F0Point.of(x, tuple(g.b.apply(list(x))), conductor))
        return FixedLocus((), tuple(pts))

    if surface == "RULED":
        if g.kind != "linear2":
            raise GeometryError("the ruled model needs an honest 2x2 element")
        m = g.m
        if m.is_scalar():
            return FixedLocus((RuledSection("E"), RuledSection("Ep")), ())
        curves, points = [], []
        for lam, vecs in _eigen_directions(m):
            for v in vecs:
                if lam.is_one():
                    curves.append(RuledFiber.of(v, conductor))
                else:
                    points.append(RuledPoint.of("E", v, conductor))
                    points.append(RuledPoint.of("Ep", v, conductor))
        return FixedLocus(tuple(curves), tuple(points))

    raise GeometryError(f"unknown surface {surface!r}")


def element_fixes_point(g, pt) -> bool:
    if isinstance(pt, P2Point):
        return _parallel(g.lift.apply(list(pt.coords)), pt.coords)
    if isinstance(pt, F0Point):
        if not g.swap:
            return _parallel(g.a.apply(list(pt.x)), pt.x) and _parallel(
                g.b.apply(list(pt.y)), pt.y
            )
        return _parallel(g.a.apply(list(pt.y)), pt.x) and _parallel(
            g.b.apply(list(pt.x)), pt.y
        )
    if isinstance(pt, RuledPoint):
        return _parallel(g.m.apply(list(pt.direction)), pt.direction)
    raise TypeError(pt)


def element_fixes_curve_pointwise(g, curve) -> bool:
    """Substitution check used by tests: a projective map fixing three
    distinct points of a rational curve fixes it pointwise."""
    if isinstance(curve, RuledSection):
        return g.m.is_scalar()
    if isinstance(curve, RuledFiber):
        d = list(curve.direction)
        img = g.m.apply(d)
        return all((a - b).is_zero() for a, b in zip(img, d))
    samples = curve.sample_points()
    return all(element_fixes_point(g, p) for p in samples)


def transform_point(g, pt):
    if isinstance(pt, P2Point):
        return P2Point.of(g.lift.apply(list(pt.coords)))
    if isinstance(pt, F0Point):
        if not g.swap:
            return F0Point.of(g.a.apply(list(pt.x)), g.b.apply(list(pt.y)))
        return F0Point.of(g.a.apply(list(pt.y)), g.b.apply(list(pt.x)))
    if isinstance(pt, RuledPoint):
        return RuledPoint.of(pt.section, g.m.apply(list(pt.direction)))
    raise TypeError(pt)


def transform_curve(g, curve):
    if isinstance(curve, Line):
        inv = g.lift.inverse()
        # a line moves by the inverse transpose on dual coordinates
        d = curve.dual
        new = tuple(
            sum((inv.rows[i][j] * d[i] for i in range(3)), CycloNum.zero())
            for j in range(3)
        )
        return Line.of(new)
    if isinstance(curve, FiberFirst):
        if not g.swap:
            return FiberFirst.of(g.a.apply(list(curve.base)))
        return FiberSecond.of(g.b.apply(list(curve.base)))
    if isinstance(curve, FiberSecond):
        if not g.swap:
            return FiberSecond.of(g.b.apply(list(curve.base)))
        return FiberFirst.of(g.a.apply(list(curve.base)))
    if isinstance(curve, GraphCurve):
        if not g.swap:
            return GraphCurve.of(g.a * curve.lift * g.b.inverse())
        return GraphCurve.of(g.a * curve.lift.inverse() * g.b.inverse())
    if isinstance(curve, RuledSection):
        return curve
    if isinstance(curve, RuledFiber):
        return RuledFiber.of(g.m.apply(list(curve.direction)))
    raise TypeError(curve)


def euler_number(locus: FixedLocus) -> int:
    """Topological Euler number of a fixed locus made of rational curves
    and isolated points."""
    return len(locus.isolated_points) + 2 * len(locus.curves)


# ---------------------------------------------------------------------------
# the configuration of fixed curves


@dataclass(frozen=True)
class CurveNode:
    curve: object
    stabilizer: tuple  # every element fixing the curve pointwise (with identity)
    generator: object  # a generator of the (cyclic) nontrivial part

    @property
    def self_intersection(self):
        return self.curve.self_intersection


@dataclass(frozen=True)
class PointNode:
    point: object
    curve_indices: tuple  # sorted indices of incident configuration curves
    stabilizer: tuple
    is_abelian: bool
    is_cyclic: bool


@dataclass(frozen=True)
class Configuration:
    surface: str
    curves: tuple  # CurveNode
    points: tuple  # PointNode (each geometric point appears once)


def _work_conductor(group: FiniteGroup) -> int:
    out = 1
    for el in group.elements:
        if isinstance(el, Linear2):
            lifts = [el.m]
        elif isinstance(el, ProjEl):
            lifts = [el.lift]
        else:
            lifts = [el.a, el.b]
        for m in lifts:
            out = _lcm(out, m.conductor())
            out = _lcm(out, _linear_order(m))
    return out


def _curve_intersection(c1, c2, conductor):
    """Exact intersection points of two distinct configuration curves."""
    k1, k2 = c1.key()[0], c2.key()[0]
    pair = tuple(sorted((k1, k2)))
    if pair == ("line", "line"):
        return [P2Point.of(_cross(c1.dual, c2.dual), conductor)]
    if pair == ("fiber1", "fiber2"):
        f1 = c1 if k1 == "fiber1" else c2
        f2 = c2 if k1 == "fiber1" else c1
        return [F0Point.of(f1.base, f2.base, conductor)]
    if pair == ("fiber1", "fiber1") or pair == ("fiber2", "fiber2"):
        return []
    if pair == ("fiber1", "graph"):
        f, gc = (c1, c2) if k1 == "fiber1" else (c2, c1)
        y = gc.lift.inverse().apply(list(f.base))
        return [F0Point.of(f.base, y, conductor)]
    if pair == ("fiber2", "graph"):
        f, gc = (c1, c2) if k1 == "fiber2" else (c2, c1)
        x = gc.lift.apply(list(f.base))
        return [F0Point.of(x, f.base, conductor)]
    if pair == ("graph", "graph"):
        rel = c2.lift.inverse() * c1.lift
        if rel.is_scalar():
            raise GeometryError("coincident graph curves were not deduplicated")
        pts = []
        for _lam, vecs in _eigen_directions(rel):
            for y in vecs:
                pts.append(F0Point.of(tuple(c1.lift.apply(list(y))), y, conductor))
        return pts
    if pair == ("ruled-fiber", "section"):
        f, s = (c1, c2) if k1 == "ruled-fiber" else (c2, c1)
        return [RuledPoint.of(s.name, f.direction, conductor)]
    if pair == ("section", "section") or pair == ("ruled-fiber", "ruled-fiber"):
        return []
    raise GeometryError(f"cannot intersect {k1} with {k2}")


def _commutes(a, b) -> bool:
    """Commutation test avoiding canonical rescaling of products."""
    if isinstance(a, ProjEl):
        m = (a.lift * b.lift).entries_key()
        n = (b.lift * a.lift).entries_key()
        return _parallel(m, n)
    if isinstance(a, Linear2):
        return a.m * b.m == b.m * a.m
    return a.mul(b) == b.mul(a)


def _element_orders(group: FiniteGroup) -> dict:
    from .groups import element_order

    return {el.key(): element_order(el, cap=group.order + 1) for el in group.elements}


def _cyclic_generator(stab, orders):
    """A maximal-order element of the (cyclic) nontrivial part."""
    best, best_order = None, 0
    for el in stab:
        if el.is_identity():
            continue
        o = orders[el.key()]
        if o > best_order:
            best, best_order = el, o
    return best


def sigma_configuration(group: FiniteGroup, surface: str | None = None) -> Configuration:
    """All curves fixed pointwise by nontrivial elements, with curve and
    intersection-point stabilizers."""
    if group.kind == "proj2":
        group = as_f0_group(group)
    if surface is None:
        surface = surface_for(group)
    conductor = _work_conductor(group)
    orders = _element_orders(group)

    curve_objs: list = []
    curve_stabs: list = []
    seen: dict = {}
    for el in group.elements:
        if el.is_identity():
            continue
        for curve in fixed_locus(el, surface, conductor).curves:
            k = curve.key()
            if k not in seen:
                seen[k] = len(curve_objs)
                curve_objs.append(curve)
                curve_stabs.append([])
            curve_stabs[seen[k]].append(el)

    ident = identity_like(group.elements[0])
    nodes = []
    for curve, stab in zip(curve_objs, curve_stabs):
        nodes.append(
            CurveNode(
                curve=curve,
                stabilizer=tuple([ident] + stab),
                generator=_cyclic_generator(stab, orders),
            )
        )

    points: dict = {}
    for i in range(len(curve_objs)):
        for j in range(i + 1, len(curve_objs)):
            for pt in _curve_intersection(curve_objs[i], curve_objs[j], conductor):
                entry = points.setdefault(pt.key(), (pt, set()))
                entry[1].update((i, j))

    point_nodes = []
    for _key, (pt, incident) in sorted(points.items(), key=lambda kv: repr(kv[0])):
        stab = tuple(el for el in group.elements if element_fixes_point(el, pt))
        abelian = all(
            _commutes(stab[i], stab[j])
            for i in range(len(stab))
            for j in range(i + 1, len(stab))
        )
        cyclic = max(orders[el.key()] for el in stab) == len(stab)
        point_nodes.append(
            PointNode(
                point=pt,
                curve_indices=tuple(sorted(incident)),
                stabilizer=stab,
                is_abelian=abelian,
                is_cyclic=cyclic,
            )
        )
    return Configuration(surface, tuple(nodes), tuple(point_nodes))


# ---------------------------------------------------------------------------
# the cycle obstruction


@dataclass(frozen=True)
class CycleWitness:
    curve_indices: tuple
    point_indices: tuple  # point i joins curve i and curve i+1 (cyclically)
    elements: tuple  # chosen nontrivial stabilizer element per curve

    def describe(self, config: Configuration):
        return {
            "curves": [config.curves[i].curve.text() for i in self.curve_indices],
            "points": [config.points[i].point.text() for i in self.point_indices],
        }


def _pair_noncyclic_abelian(g, h) -> bool:
    if not _commutes(g, h):
        return False
    return not is_cyclic_set(generated_subgroup([g, h]))


def criterion_cycle(config: Configuration, group: FiniteGroup):
    """First cycle of curves, through pairwise distinct intersection
    points, whose consecutive pointwise-stabilizer elements generate
    noncyclic abelian subgroups.  Deterministic; None when there is none."""
    ncurves = len(config.curves)

    def stab_choices(cidx):
        return [el for el in config.curves[cidx].stabilizer if not el.is_identity()]

    pair_cache: dict = {}

    def pair_ok(g, h) -> bool:
        key = (g.key(), h.key())
        if key not in pair_cache:
            pair_cache[key] = _pair_noncyclic_abelian(g, h)
            pair_cache[(key[1], key[0])] = pair_cache[key]
        return pair_cache[key]

    # two curves can be consecutive in a witness only if some pair of their
    # stabilizer elements is noncyclic abelian; prune adjacency accordingly
    compat: dict = {}

    def curves_compatible(a, b) -> bool:
        key = (min(a, b), max(a, b))
        if key not in compat:
            compat[key] = any(
                pair_ok(g, h) for g in stab_choices(a) for h in stab_choices(b)
            )
        return compat[key]

    # adjacency: curve index -> list of (point index, other curve index)
    adj = [[] for _ in range(ncurves)]
    for pidx, pnode in enumerate(config.points):
        for a in pnode.curve_indices:
            for b in pnode.curve_indices:
                if a != b and curves_compatible(a, b):
                    adj[a].append((pidx, b))

    def assign_elements(cycle_curves, cycle_points):
        k = len(cycle_curves)
        choices = [stab_choices(c) for c in cycle_curves]
        picked = []

        def backtrack(i):
            if i == k:
                return pair_ok(picked[-1], picked[0])
            for el in choices[i]:
                if i and not pair_ok(picked[i - 1], el):
                    continue
                picked.append(el)
                if backtrack(i + 1):
                    return True
                picked.pop()
            return False

        return picked if backtrack(0) else None

    def search(start):
        path_curves = [start]
        path_points = []
        used_points = set()

        def extend():
            cur = path_curves[-1]
            for pidx, nxt in adj[cur]:
                if pidx in used_points:
                    continue
                if nxt == start and len(path_curves) >= 2:
                    picked = assign_elements(path_curves, path_points + [pidx])
                    if picked is not None:
                        return CycleWitness(
                            tuple(path_curves),
                            tuple(path_points + [pidx]),
                            tuple(picked),
                        )
                if nxt in path_curves or nxt < start:
                    continue
                path_curves.append(nxt)
                path_points.append(pidx)
                used_points.add(pidx)
                found = extend()
                if found is not None:
                    return found
                path_curves.pop()
                path_points.pop()
                used_points.discard(pidx)
            return None

        return extend()

    for start in range(ncurves):
        found = search(start)
        if found is not None:
            return found
    return None


# ---------------------------------------------------------------------------
# the chain criterion


def cycstab_check(config: Configuration, group: FiniteGroup):
    """(ok, report).  ok is true when every intersection point has abelian
    stabilizer and, after separating cyclic-stabilizer points lying on
    curves that meet others at most twice, every component of the
    configuration is a simple chain."""
    report = []
    for pidx, pnode in enumerate(config.points):
        if not pnode.is_abelian:
            report.append(
                f"point {pnode.point.text()} has nonabelian stabilizer "
                f"(order {len(pnode.stabilizer)})"
            )
    if report:
        return False, report

    meets = [0] * len(config.curves)
    for pnode in config.points:
        for c in pnode.curve_indices:
            meets[c] += 1
    low_meet = {c for c, m in enumerate(meets) if m <= 2}

    remaining = []
    for pidx, pnode in enumerate(config.points):
        removable = pnode.is_cyclic and any(c in low_meet for c in pnode.curve_indices)
        if not removable:
            remaining.append(pidx)

    degree = [0] * len(config.curves)
    edges = []
    for pidx in remaining:
        pnode = config.points[pidx]
        if len(pnode.curve_indices) > 2:
            report.append(
                f"point {pnode.point.text()} joins {len(pnode.curve_indices)} "
                "curves and cannot be separated"
            )
            return False, report
        a, b = pnode.curve_indices
        edges.append((a, b))
        degree[a] += 1
        degree[b] += 1

    for c, d in enumerate(degree):
        if d > 2:
            report.append(f"curve {config.curves[c].curve.text()} has degree {d} after separation")
            return False, report

    # with all degrees <= 2, any non-chain component is a closed cycle
    parent = list(range(len(config.curves)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            report.append("a closed cycle of curves survives separation")
            return False, report
        parent[ra] = rb
    return True, report


# ---------------------------------------------------------------------------
# the nine-line / twelve-point fallback on P^2


def arrangement_stats(config: Configuration):
    """(n_curves, n_multi_points, points_per_line, lines_per_point) where a
    multi-point lies on >= 2 curves; the last two are None when not
    uniform."""
    multi = [p for p in config.points if len(p.curve_indices) >= 2]
    per_line = [0] * len(config.curves)
    for p in multi:
        for c in p.curve_indices:
            per_line[c] += 1
    ppl = set(per_line)
    lpp = {len(p.curve_indices) for p in multi}
    return (
        len(config.curves),
        len(multi),
        ppl.pop() if len(ppl) == 1 else None,
        lpp.pop() if len(lpp) == 1 else None,
    )


def matches_hessian_arrangement(config: Configuration) -> bool:
    if config.surface != "P2" or any(
        node.curve.key()[0] != "line" for node in config.curves
    ):
        return False
    return arrangement_stats(config) == (9, 12, 4, 3)


def hessian_scenario_check(config: Configuration, group: FiniteGroup):
    """(ok, report) for the special model: blow up the twelve triple points
    and contract the nine lines.  The result has only isolated fixed
    points provided no element with a pointwise fixed line has its extra
    isolated fixed point at one of the twelve centers (the exceptional
    curve there would stay fixed pointwise)."""
    report = []
    if not matches_hessian_arrangement(config):
        report.append("configuration is not a nine-line, twelve-point arrangement")
        return False, report
    centers = {
        p.point.key() for p in config.points if len(p.curve_indices) >= 2
    }
    line_keys = {node.curve.key() for node in config.curves}
    conductor = _work_conductor(group)
    for el in group.elements:
        if el.is_identity():
            continue
        locus = fixed_locus(el, config.surface, conductor)
        if not locus.curves:
            continue
        for curve in locus.curves:
            if curve.key() not in line_keys:
                report.append(f"fixed {curve.text()} is outside the arrangement")
                return False, report
        for pt in locus.isolated_points:
            if pt.key() in centers:
                report.append(
                    f"isolated fixed point {pt.text()} is a blow-up center"
                )
                return False, report
    return True, report


# ---------------------------------------------------------------------------
# the verdict


@dataclass(frozen=True)
class Verdict:
    status: str  # "ifp-birational" | "not-ifp-birational" | "unknown"
    method: str
    witness: object = None
    report: tuple = ()
    config: Configuration = None


def decide_ifp_birational(spec_or_group, cap: int = 10000) -> Verdict:
    if isinstance(spec_or_group, GroupSpec):
        group = build(spec_or_group, cap)
    else:
        group = spec_or_group
    if group.kind == "proj2":
        group = as_f0_group(group)
    config = sigma_configuration(group)

    witness = criterion_cycle(config, group)
    if witness is not None:
        return Verdict(
            "not-ifp-birational",
            "stabilizer-cycle obstruction",
            witness=witness,
            config=config,
        )

    ok, report = cycstab_check(config, group)
    if ok:
        return Verdict("ifp-birational", "chain criterion", report=tuple(report), config=config)

    if config.surface == "P2":
        ok2, report2 = hessian_scenario_check(config, group)
        if ok2:
            return Verdict(
                "ifp-birational",
                "nine-line contraction model",
                report=tuple(report),
                config=config,
            )
        report = report + report2

    return Verdict("unknown", "no criterion applied", report=tuple(report), config=config)
