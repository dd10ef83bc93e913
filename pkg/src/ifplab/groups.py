"""Finite matrix groups acting on P^2, on P^1 x P^1, or linearly on C^2.

Every element carries a *lift* of finite linear order; products of lifts
stay of finite order, so eigenvalues of any element are honest roots of
unity and can be found exactly.  Projective elements are compared through
a canonical rescaling (first nonzero entry, row-major, equal to 1).

Group specs are small tagged records with named constructors and a textual
grammar (`parse_group_spec`) used by the command line tool.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNum, Matrix, linear_order

DEFAULT_CAP = 10000


class GroupSpecError(ValueError):
    pass


# ---------------------------------------------------------------------------
# elements


class Linear2:
    """An honest 2x2 matrix; equality is exact, not projective."""

    kind = "linear2"
    __slots__ = ("m", "_key")

    def __init__(self, m: Matrix):
        self.m = m
        self._key = ("linear2", m.entries_key())

    def mul(self, other: "Linear2") -> "Linear2":
        return Linear2(self.m * other.m)

    def inverse(self) -> "Linear2":
        return Linear2(self.m.inverse())

    def is_identity(self) -> bool:
        return self.m.is_identity()

    def key(self):
        return self._key

    def coerce(self, n: int):
        return Linear2(self.m.coerce(n))

    def __eq__(self, other):
        return isinstance(other, Linear2) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Linear2({self.m!r})"


class ProjEl:
    """A projective matrix element (k = 2 or 3) with a finite-order lift."""

    __slots__ = ("lift", "canon", "_key", "kind")

    def __init__(self, lift: Matrix):
        self.lift = lift
        self.canon = lift.scalar_canonical()
        self.kind = "proj2" if lift.k == 2 else "proj3"
        self._key = (self.kind, self.canon.entries_key())

    def mul(self, other: "ProjEl") -> "ProjEl":
        return ProjEl(self.lift * other.lift)

    def inverse(self) -> "ProjEl":
        return ProjEl(self.lift.inverse())

    def is_identity(self) -> bool:
        return self.lift.is_scalar()

    def key(self):
        return self._key

    def coerce(self, n: int):
        return ProjEl(self.lift.coerce(n))

    def __eq__(self, other):
        return isinstance(other, ProjEl) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"ProjEl({self.canon!r})"


class WreathEl:
    """Element of PGL2 wr Z/2 acting on P^1 x P^1.

    (a, b; swap=False) sends (x, y) to (a x, b y);
    (a, b; swap=True)  sends (x, y) to (a y, b x).
    """

    kind = "wreath"
    __slots__ = ("a", "b", "swap", "_key")

    def __init__(self, a: Matrix, b: Matrix, swap: bool):
        self.a = a
        self.b = b
        self.swap = swap
        self._key = (
            "wreath",
            a.scalar_canonical().entries_key(),
            b.scalar_canonical().entries_key(),
            swap,
        )

    def mul(self, other: "WreathEl") -> "WreathEl":
        # self o other: apply `other` first
        if not self.swap:
            return WreathEl(self.a * other.a, self.b * other.b, other.swap)
        return WreathEl(self.a * other.b, self.b * other.a, not other.swap)

    def inverse(self) -> "WreathEl":
        if not self.swap:
            return WreathEl(self.a.inverse(), self.b.inverse(), False)
        return WreathEl(self.b.inverse(), self.a.inverse(), True)

    def is_identity(self) -> bool:
        return (not self.swap) and self.a.is_scalar() and self.b.is_scalar()

    def key(self):
        return self._key

    def coerce(self, n: int):
        return WreathEl(self.a.coerce(n), self.b.coerce(n), self.swap)

    def first_trivial(self) -> bool:
        return self.a.is_scalar()

    def second_trivial(self) -> bool:
        return self.b.is_scalar()

    def __eq__(self, other):
        return isinstance(other, WreathEl) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        tag = "swap" if self.swap else "no-swap"
        return f"WreathEl({self.a.scalar_canonical()!r}, {self.b.scalar_canonical()!r}, {tag})"


def identity_like(el):
    """Identity element at the same conductor as `el`, so that hashing and
    equality line up inside one group."""
    if isinstance(el, Linear2):
        return Linear2(Matrix.identity(2).coerce(el.m.conductor()))
    if isinstance(el, ProjEl):
        return ProjEl(Matrix.identity(el.lift.k).coerce(el.lift.conductor()))
    if isinstance(el, WreathEl):
        n = el.a.conductor()
        n = n * el.b.conductor() // gcd(n, el.b.conductor())
        eye = Matrix.identity(2).coerce(n)
        return WreathEl(eye, eye, False)
    raise TypeError(el)


def element_order(el, cap: int = 10000) -> int:
    acc = el
    for t in range(1, cap + 1):
        if acc.is_identity():
            return t
        acc = acc.mul(el)
    raise ValueError("element order exceeds cap")


# ---------------------------------------------------------------------------
# closure and group container


def close_under_multiplication(generators, cap: int = DEFAULT_CAP):
    """Deterministic BFS closure of the generator list (identity first)."""
    if not generators:
        raise GroupSpecError("no generators")
    ident = identity_like(generators[0])
    elements = [ident]
    index = {ident.key(): 0}
    i = 0
    while i < len(elements):
        for g in generators:
            p = elements[i].mul(g)
            k = p.key()
            if k not in index:
                index[k] = len(elements)
                elements.append(p)
                if len(elements) > cap:
                    raise GroupSpecError(f"closure exceeded cap of {cap} elements")
        i += 1
    return elements, index


class FiniteGroup:
    def __init__(self, spec, kind, conductor, generators, elements, index):
        self.spec = spec
        self.kind = kind
        self.conductor = conductor
        self.generators = generators
        self.elements = elements
        self.index = index

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def contains(self, el) -> bool:
        return el.key() in self.index

    def nontrivial(self):
        return [g for g in self.elements if not g.is_identity()]

    def is_abelian(self) -> bool:
        els = self.elements
        for i in range(len(els)):
            for j in range(i + 1, len(els)):
                if els[i].mul(els[j]).key() != els[j].mul(els[i]).key():
                    return False
        return True

    def __repr__(self):
        return f"FiniteGroup({spec_to_text(self.spec) if self.spec else self.kind}, order={self.order})"


def generated_subgroup(elements, cap: int = DEFAULT_CAP):
    """Element list of the subgroup generated by the given elements."""
    gens = [e for e in elements if not e.is_identity()]
    if not gens:
        return [identity_like(elements[0])] if elements else []
    els, _ = close_under_multiplication(gens, cap)
    return els

def is_abelian_set(elements) -> bool:
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            a, b = elements[i], elements[j]
            if a.mul(b).key() != b.mul(a).key():
                return False
    return True


def is_cyclic_set(elements) -> bool:
    n = len(elements)
    return any(element_order(e, cap=n + 1) == n for e in elements)


def center(group: FiniteGroup):
    out = []
    for g in group.elements:
        if all(g.mul(h).key() == h.mul(g).key() for h in group.elements):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# specs


class GroupSpec:
    """Tagged record describing how to build a group."""

    __slots__ = ("tag", "kw")

    def __init__(self, tag: str, **kw):
        self.tag = tag
        self.kw = kw

    def __eq__(self, other):
        return (
            isinstance(other, GroupSpec)
            and self.tag == other.tag
            and self.kw == other.kw
        )

    def __hash__(self):
        return hash((self.tag, tuple(sorted((k, repr(v)) for k, v in self.kw.items()))))

    def __repr__(self):
        return f"GroupSpec({spec_to_text(self)})"


def Cyclic(n):
    return GroupSpec("cyclic", n=n)


def Dihedral(order):
    return GroupSpec("dihedral", order=order)


def Dicyclic(order):
    return GroupSpec("dicyclic", order=order)


def BinaryTetrahedral():
    return GroupSpec("binary-tetrahedral")


def BinaryOctahedral():
    return GroupSpec("binary-octahedral")


def BinaryIcosahedral():
    return GroupSpec("binary-icosahedral")


def Tetrahedral():
    return GroupSpec("tetrahedral")


def Octahedral():
    return GroupSpec("octahedral")


def Icosahedral():
    return GroupSpec("icosahedral")


def ImprimitiveZn2C3(n, s):
    return GroupSpec("imprimitive-c3", n=n, s=s)


def Gnks(n, k, s):
    return GroupSpec("gnks", n=n, k=k, s=s)


def ImprimitiveZn2S3(n):
    return GroupSpec("imprimitive-s3", n=n)


def HessianKernel():
    return GroupSpec("hessian-kernel")


def HessianFull():
    return GroupSpec("hessian-full")


def HessianQ8():
    return GroupSpec("hessian-q8")


def HessianC4():
    return GroupSpec("hessian-c4")


def DiagonalF0(factor):
    return GroupSpec("diagonal-f0", factor=factor)


def ProductF0(first, second):
    return GroupSpec("product-f0", first=first, second=second)


def F4n(n):
    return GroupSpec("f4n", n=n)


def G4n(n):
    return GroupSpec("g4n", n=n)


def H4n(n, p):
    return GroupSpec("h4n", n=n, p=p)


def I4n(n, p):
    return GroupSpec("i4n", n=n, p=p)


def J4n(n, p):
    return GroupSpec("j4n", n=n, p=p)


def Sym2Lift(factor):
    return GroupSpec("sym2", factor=factor)


def Explicit(kind, matrices):
    return GroupSpec("explicit", kind=kind, matrices=tuple(matrices))


def FiberedProduct(first, second, h1, h2, alpha):
    """Fibered product inside PGL2 x PGL2: pairs (g1, g2) whose cosets
    modulo H1, H2 correspond under the isomorphism alpha, given as a list
    of coset-representative pairs (2x2 matrices)."""
    return GroupSpec(
        "fibered-product",
        first=first,
        second=second,
        h1=tuple(h1),
        h2=tuple(h2),
        alpha=tuple(alpha),
    )


# ---------------------------------------------------------------------------
# building


def _z(n, k=1):
    return CycloNum.zeta(n, k)


def _quat(a, b, c, d) -> Matrix:
    i = _z(4)
    return Matrix([[a + i * b, c + i * d], [-c + i * d, a - i * b]])


_U3 = Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])  # (x0,x1,x2) -> (x2,x0,x1)
_T3 = Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])  # swap x1, x2


def _hessian_sigmas():
    w = _z(3)
    scale = (_z(4) * (_z(12) + _z(12, 11))).inverse()  # 1 / (i*sqrt3)
    s1 = Matrix([[1, 1, 1], [1, w, w * w], [1, w * w, w]]) * scale
    s2 = Matrix([[1, w, w], [w * w, w, w * w], [w * w, w * w, w]]) * scale
    s3 = Matrix([[w, 0, 0], [0, 0, 1], [0, 1, 0]])
    return s1, s2, s3


def sym2_rep(m: Matrix) -> Matrix:
    """Symmetric square GL2 -> GL3 on the basis x0^2, x0 x1, x1^2."""
    (a, b), (c, d) = m.rows
    return Matrix(
        [
            [a * a, 2 * a * b, b * b],
            [a * c, a * d + b * c, b * d],
            [c * c, 2 * c * d, d * d],
        ]
    )


def _factor_lifts(spec, cap):
    """2x2 finite-order generator lifts and projective order of a factor spec."""
    g = build(spec, cap=cap)
    if g.kind == "linear2":
        lifts = [el.m for el in g.generators]
    elif g.kind == "proj2":
        lifts = [el.lift for el in g.generators]
    else:
        raise GroupSpecError(f"{spec_to_text(spec)} is not a group on P^1")
    proj_order = len({ProjEl(el.m if g.kind == "linear2" else el.lift).key() for el in g.elements})
    return lifts, proj_order


def _common_conductor(mats):
    n = 1
    for m in mats:
        c = m.conductor()
        n = n * c // gcd(n, c)
    return n


def build(spec: GroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    tag = spec.tag
    kw = spec.kw
    expected = None

    if tag == "cyclic":
        n = kw["n"]
        if n < 1:
            raise GroupSpecError("cyclic: n must be >= 1")
        gens = [Linear2(Matrix.diagonal([_z(n), CycloNum.one()]))]
        kind, expected = "linear2", n

    elif tag == "dihedral":
        order = kw["order"]
        if order < 2 or order % 2:
            raise GroupSpecError("dihedral: order must be even and >= 2")
        n = order // 2
        gens = [
            Linear2(Matrix.diagonal([_z(n), _z(n, n - 1)])),
            Linear2(Matrix([[0, 1], [1, 0]])),
        ]
        kind, expected = "linear2", order

    elif tag == "dicyclic":
        order = kw["order"]
        if order < 4 or order % 4:
            raise GroupSpecError("dicyclic: order must be a positive multiple of 4")
        n = order // 2
        gens = [
            Linear2(Matrix.diagonal([_z(n), _z(n, n - 1)])),
            Linear2(Matrix([[0, 1], [-1, 0]])),
        ]
        kind, expected = "linear2", order

    elif tag == "binary-tetrahedral":
        h = Fraction(1, 2)
        gens = [
            Linear2(_quat(0, 1, 0, 0)),
            Linear2(_quat(0, 0, 1, 0)),
            Linear2(_quat(-h, h, h, h)),
        ]
        kind, expected = "linear2", 24

    elif tag == "binary-octahedral":
        h = Fraction(1, 2)
        gens = [
            Linear2(_quat(0, 1, 0, 0)),
            Linear2(_quat(0, 0, 1, 0)),
            Linear2(_quat(-h, h, h, h)),
            Linear2(Matrix.diagonal([_z(8), _z(8, 7)])),
        ]
        kind, expected = "linear2", 48

    elif tag == "binary-icosahedral":
        h = Fraction(1, 2)
        root5 = 2 * (_z(5) + _z(5, 4)) + 1  # = sqrt5
        phi = (1 + root5) * h
        gens = [
            Linear2(_quat(-h, h, h, h)),
            Linear2(_quat(phi * h, (phi - 1) * h, h, 0)),
        ]
        kind, expected = "linear2", 120

    elif tag in ("tetrahedral", "octahedral", "icosahedral"):
        binary = build(GroupSpec("binary-" + tag), cap=cap)
        gens = [ProjEl(el.m) for el in binary.generators]
        kind, expected = "proj2", binary.order // 2

    elif tag == "imprimitive-c3":
        n, s = kw["n"], kw["s"]
        if n < 2 or n % 2 == 0:
            raise GroupSpecError("imprimitive-c3: n must be odd and > 1")
        if (s * s - s + 1) % n:
            raise GroupSpecError(
                "imprimitive-c3: need s^2 - s + 1 = 0 (mod n)"
            )
        gens = [
            ProjEl(_U3),
            ProjEl(Matrix.diagonal([_z(n), _z(n, s % n), CycloNum.one()])),
        ]
        kind, expected = "proj3", 3 * n

    elif tag == "gnks":
        n, k, s = kw["n"], kw["k"], kw["s"]
        if k <= 1 or n % k:
            raise GroupSpecError("gnks: need k > 1 and k | n")
        if (s * s - s + 1) % k:
            raise GroupSpecError("gnks: need s^2 - s + 1 = 0 (mod k)")
        gens = [
            ProjEl(Matrix.diagonal([_z(n // k), CycloNum.one(), CycloNum.one()])),
            ProjEl(Matrix.diagonal([_z(n, s % n), _z(n), CycloNum.one()])),
            ProjEl(_U3),
        ]
        kind, expected = "proj3", 3 * n * n // k

    elif tag == "imprimitive-s3":
        n = kw["n"]
        if n < 1:
            raise GroupSpecError("imprimitive-s3: n must be >= 1")
        gens = [
            ProjEl(Matrix.diagonal([_z(n), CycloNum.one(), CycloNum.one()])),
            ProjEl(Matrix.diagonal([CycloNum.one(), _z(n), CycloNum.one()])),
            ProjEl(_U3),
            ProjEl(_T3),
        ]
        kind, expected = "proj3", 6 * n * n

    elif tag == "hessian-kernel":
        w = _z(3)
        gens = [
            ProjEl(Matrix.diagonal([w * w, w, CycloNum.one()])),
            ProjEl(_U3),
            ProjEl(_T3),
        ]
        kind, expected = "proj3", 18

    elif tag == "hessian-full":
        w = _z(3)
        s1, s2, s3 = _hessian_sigmas()
        gens = [
            ProjEl(Matrix.diagonal([w * w, w, CycloNum.one()])),
            ProjEl(_U3),
            ProjEl(_T3),
            ProjEl(s1),
            ProjEl(s2),
            ProjEl(s3),
        ]
        kind, expected = "proj3", 216

    elif tag in ("hessian-q8", "hessian-c4"):
        w = _z(3)
        s1, s2, _ = _hessian_sigmas()
        gens = [
            ProjEl(_U3),
            ProjEl(Matrix.diagonal([w, w * w, CycloNum.one()])),
            ProjEl(s1),
        ]
        if tag == "hessian-q8":
            gens.append(ProjEl(s2))
            expected = 72
        else:
            expected = 36
        kind = "proj3"

    elif tag == "diagonal-f0":
        lifts, proj_order = _factor_lifts(kw["factor"], cap)
        gens = [WreathEl(m, m, False) for m in lifts]
        kind, expected = "wreath", proj_order

    elif tag == "product-f0":
        lifts1, o1 = _factor_lifts(kw["first"], cap)
        lifts2, o2 = _factor_lifts(kw["second"], cap)
        eye = Matrix.identity(2)
        gens = [WreathEl(m, eye, False) for m in lifts1] + [
            WreathEl(eye, m, False) for m in lifts2
        ]
        kind, expected = "wreath", o1 * o2

    elif tag in ("f4n", "g4n", "h4n", "i4n", "j4n"):
        n = kw["n"]
        if n < 1:
            raise GroupSpecError(f"{tag}: n must be >= 1")
        b = Matrix([[0, -1], [1, 0]])
        if tag in ("f4n", "g4n"):
            a1 = a2 = Matrix.diagonal([_z(n), CycloNum.one()])
        else:
            p = kw["p"]
            if (p * p + 1) % n:
                raise GroupSpecError(f"{tag}: need p^2 = -1 (mod n)")
            if tag == "i4n" and n % 2:
                raise GroupSpecError("i4n: n must be even")
            if tag == "j4n" and n % 2 == 0:
                raise GroupSpecError("j4n: n must be odd")
            a1 = Matrix.diagonal([_z(n), CycloNum.one()])
            a2 = Matrix.diagonal([_z(n, p % n), CycloNum.one()])
        if tag == "f4n":
            t = WreathEl(
                Matrix.diagonal([_z(2 * n), CycloNum.one()]),
                Matrix.diagonal([-_z(2 * n), CycloNum.one()]),
                True,
            )
        elif tag == "g4n":
            t = WreathEl(Matrix.diagonal([-CycloNum.one(), CycloNum.one()]), Matrix.identity(2), True)
        elif tag == "h4n":
            t = WreathEl(b, Matrix.identity(2), True)
        elif tag == "i4n":
            t = WreathEl(b, Matrix.diagonal([-CycloNum.one(), CycloNum.one()]), True)
        else:  # j4n
            t = WreathEl(
                Matrix([[0, 1], [1, 0]]),
                Matrix.diagonal([-CycloNum.one(), CycloNum.one()]),
                True,
            )
        gens = [WreathEl(b, b, False), WreathEl(a1, a2, False), t]
        kind = "wreath"
        expected = 4 * n if n % 2 == 0 else None

    elif tag == "sym2":
        lifts, proj_order = _factor_lifts(kw["factor"], cap)
        gens = [ProjEl(sym2_rep(m)) for m in lifts]
        kind, expected = "proj3", proj_order

    elif tag == "explicit":
        mats = [m if isinstance(m, Matrix) else Matrix(m) for m in kw["matrices"]]
        if not mats:
            raise GroupSpecError("explicit: at least one generator required")
        k = mats[0].k
        if any(m.k != k for m in mats):
            raise GroupSpecError("explicit: generators must share a size")
        ekind = kw["kind"]
        if ekind == "gl2":
            if k != 2:
                raise GroupSpecError("explicit gl2: matrices must be 2x2")
            for m in mats:
                linear_order(m, cap=720)
            gens = [Linear2(m) for m in mats]
            kind = "linear2"
        elif ekind == "p3":
            if k != 3:
                raise GroupSpecError("explicit p3: matrices must be 3x3")
            for m in mats:
                linear_order(m, cap=720)
            gens = [ProjEl(m) for m in mats]
            kind = "proj3"
        else:
            raise GroupSpecError("explicit: kind must be gl2 or p3")

    elif tag == "fibered-product":
        return _build_fibered(spec, cap)

    else:
        raise GroupSpecError(f"unknown group spec tag {tag!r}")

    conductor = _common_conductor(_gen_matrices(gens))
    gens = [g.coerce(conductor) for g in gens]
    elements, index = close_under_multiplication(gens, cap)
    if expected is not None and len(elements) != expected:
        raise GroupSpecError(
            f"{spec_to_text(spec)}: closure produced {len(elements)} elements, expected {expected}"
        )
    return FiniteGroup(spec, kind, conductor, gens, elements, index)


def _gen_matrices(gens):
    out = []
    for g in gens:
        if isinstance(g, Linear2):
            out.append(g.m)
        elif isinstance(g, ProjEl):
            out.append(g.lift)
        else:
            out.extend([g.a, g.b])
    return out


def _build_fibered(spec, cap):
    kw = spec.kw
    lifts1, _ = _factor_lifts(kw["first"], cap)
    lifts2, _ = _factor_lifts(kw["second"], cap)
    n = _common_conductor(
        lifts1 + lifts2 + list(kw["h1"]) + list(kw["h2"]) + [m for pr in kw["alpha"] for m in pr]
    )
    proj1, _ = close_under_multiplication([ProjEl(m.coerce(n)) for m in lifts1], cap)
    proj2, _ = close_under_multiplication([ProjEl(m.coerce(n)) for m in lifts2], cap)

    def subgroup(parent, mats):
        parent_keys = {p.key() for p in parent}
        els = [ProjEl(m.coerce(n)) for m in mats]
        for e in els:
            if e.key() not in parent_keys:
                raise GroupSpecError("fibered-product: subgroup generator outside factor")
        if not any(not e.is_identity() for e in els):
            return [identity_like(parent[0])]
        return generated_subgroup(els, cap)

    h1 = subgroup(proj1, kw["h1"])
    h2 = subgroup(proj2, kw["h2"])
    h1_keys = {e.key() for e in h1}
    h2_keys = {e.key() for e in h2}

    def coset_id(g, reps, h_keys):
        for i, r in enumerate(reps):
            if r.inverse().mul(g).key() in h_keys:
                return i
        return None

    reps1 = [ProjEl(a.coerce(n)) for a, _ in kw["alpha"]]
    reps2 = [ProjEl(b.coerce(n)) for _, b in kw["alpha"]]
    if len(proj1) % len(h1) or len(proj2) % len(h2):
        raise GroupSpecError("fibered-product: subgroup order does not divide group order")
    q = len(proj1) // len(h1)
    if len(reps1) != q or len(proj2) // len(h2) != q:
        raise GroupSpecError("fibered-product: quotients have different sizes")
    # well-definedness: the rep pairing must be a homomorphism of quotients
    for i in range(q):
        for j in range(q):
            k1 = coset_id(reps1[i].mul(reps1[j]), reps1, h1_keys)
            k2 = coset_id(reps2[i].mul(reps2[j]), reps2, h2_keys)
            if k1 is None or k2 is None:
                raise GroupSpecError("fibered-product: rep list does not cover the quotient")
            if k1 != k2:
                raise GroupSpecError("fibered-product: alpha is not an isomorphism")
    pairs = []
    for g1 in proj1:
        c1 = coset_id(g1, reps1, h1_keys)
        for g2 in proj2:
            if coset_id(g2, reps2, h2_keys) == c1:
                pairs.append(WreathEl(g1.lift, g2.lift, False))
    elements = pairs
    index = {e.key(): i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise GroupSpecError("fibered-product: duplicate pairs (bad subgroups)")
    return FiniteGroup(spec, "wreath", n, elements, elements, index)


def factor_intersections(group: FiniteGroup):
    """For a group on P^1 x P^1: orders of G cap (PGL2 x 1) and
    G cap (1 x PGL2), and the index of the no-swap part (1 or 2)."""
    if group.kind != "wreath":
        raise GroupSpecError("factor_intersections needs a group on P^1 x P^1")
    g1 = sum(
        1 for e in group.elements if not e.swap and e.second_trivial()
    )
    g2 = sum(
        1 for e in group.elements if not e.swap and e.first_trivial()
    )
    untwisted_index = 2 if any(e.swap for e in group.elements) else 1
    return g1, g2, untwisted_index


# ---------------------------------------------------------------------------
# textual grammar


def spec_to_text(spec: GroupSpec) -> str:
    t = spec.tag
    kw = spec.kw
    if t == "cyclic":
        return f"cyclic {kw['n']}"
    if t in ("dihedral", "dicyclic"):
        return f"{t} {kw['order']}"
    if t in (
        "binary-tetrahedral",
        "binary-octahedral",
        "binary-icosahedral",
        "tetrahedral",
        "octahedral",
        "icosahedral",
        "hessian-kernel",
        "hessian-full",
        "hessian-q8",
        "hessian-c4",
    ):
        return t
    if t == "imprimitive-c3":
        return f"imprimitive-c3 n={kw['n']} s={kw['s']}"
    if t == "gnks":
        return f"gnks n={kw['n']} k={kw['k']} s={kw['s']}"
    if t == "imprimitive-s3":
        return f"imprimitive-s3 n={kw['n']}"
    if t in ("f4n", "g4n"):
        return f"{t} n={kw['n']}"
    if t in ("h4n", "i4n", "j4n"):
        return f"{t} n={kw['n']} p={kw['p']}"
    if t == "diagonal-f0":
        return f"diagonal-f0 ({spec_to_text(kw['factor'])})"
    if t == "product-f0":
        return f"product-f0 ({spec_to_text(kw['first'])}) ({spec_to_text(kw['second'])})"
    if t == "sym2":
        return f"sym2 ({spec_to_text(kw['factor'])})"
    if t == "explicit":
        mats = " ".join(_matrix_to_text(m) for m in kw["matrices"])
        return f"explicit {kw['kind']} {mats}"
    if t == "fibered-product":
        return "fibered-product (...)"
    raise GroupSpecError(f"unknown tag {t}")


def _entry_to_text(e: CycloNum) -> str:
    if e.is_rational():
        return str(e.as_rational())
    terms = []
    for i, a in enumerate(e.c):
        if a == 0:
            continue
        base = f"z{e.n}" + (f"^{i}" if i > 1 else "") if i else None
        if i == 0:
            terms.append(str(a))
        elif a == 1:
            terms.append(base)
        elif a == -1:
            terms.append(f"-{base}")
        else:
            terms.append(f"{a}*{base}")
    text = terms[0]
    for t in terms[1:]:
        text += t if t.startswith("-") else "+" + t
    return text


def _matrix_to_text(m) -> str:
    if not isinstance(m, Matrix):
        m = Matrix(m)
    return "[" + ";".join(",".join(_entry_to_text(e) for e in row) for row in m.rows) + "]"


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()[]":
            tokens.append(ch)
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()[]":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


_LITERAL_TOKS = set("+-*/^(),;")


def _parse_entry(text: str) -> CycloNum:
    """Parse a cyclotomic literal: integers, rationals a/b, zN^k, products
    and sums, e.g. `z12^5`, `-1/2+1/2*z4`."""
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _LITERAL_TOKS:
            toks.append(ch)
            i += 1
        elif ch.isdigit() or ch == "z":
            j = i
            while j < len(text) and (text[j].isalnum()):
                j += 1
            toks.append(text[i:j])
            i = j
        else:
            raise GroupSpecError(f"bad character {ch!r} in matrix entry {text!r}")
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else None

    def take():
        t = peek()
        pos[0] += 1
        return t

    def atom() -> CycloNum:
        t = take()
        if t == "(":
            v = expr()
            if take() != ")":
                raise GroupSpecError(f"unbalanced parens in {text!r}")
        elif t is None:
            raise GroupSpecError(f"truncated entry {text!r}")
        elif t.startswith("z"):
            n = int(t[1:])
            v = CycloNum.zeta(n)
        else:
            v = CycloNum.rational(int(t))
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            v = v ** (sign * int(take()))
        return v

    def term() -> CycloNum:
        v = atom()
        while peek() in ("*", "/"):
            if take() == "*":
                v = v * atom()
            else:
                v = v / atom()
        return v

    def expr() -> CycloNum:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        v = term() * sign
        while peek() in ("+", "-"):
            s = -1 if take() == "-" else 1
            v = v + term() * s
        return v

    v = expr()
    if pos[0] != len(toks):
        raise GroupSpecError(f"trailing junk in entry {text!r}")
    return v


def _parse_matrix(body: str) -> Matrix:
    rows = [r for r in body.split(";") if r]
    return Matrix([[_parse_entry(e) for e in row.split(",")] for row in rows])


_INT_PARAMS = {"n", "s", "k", "p", "order"}


class _SpecParser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def intarg(self, what: str) -> int:
        t = self.take()
        try:
            return int(t)
        except (TypeError, ValueError):
            raise GroupSpecError(f"expected an integer {what}, got {t!r}")

    def parse(self) -> GroupSpec:
        spec = self.parse_one()
        if self.peek() is not None:
            raise GroupSpecError(f"unexpected token {self.peek()!r}")
        return spec

    def sub(self) -> GroupSpec:
        if self.take() != "(":
            raise GroupSpecError("expected '(' before a factor spec")
        spec = self.parse_one()
        if self.take() != ")":
            raise GroupSpecError("expected ')' after a factor spec")
        return spec

    def params(self, required):
        out = {}
        for name in required:
            t = self.take()
            if t is None or "=" not in t:
                raise GroupSpecError(f"expected {name}=<int>")
            key, _, val = t.partition("=")
            if key not in required:
                raise GroupSpecError(f"unknown parameter {key!r}")
            out[key] = int(val)
        if set(out) != set(required):
            raise GroupSpecError(f"missing parameters, need {sorted(required)}")
        return out

    def parse_one(self) -> GroupSpec:
        head = self.take()
        if head is None:
            raise GroupSpecError("empty group spec")
        if head == "cyclic":
            return Cyclic(self.intarg("order"))
        if head == "dihedral":
            return Dihedral(self.intarg("order"))
        if head == "dicyclic":
            return Dicyclic(self.intarg("order"))
        if head in (
            "binary-tetrahedral",
            "binary-octahedral",
            "binary-icosahedral",
            "tetrahedral",
            "octahedral",
            "icosahedral",
            "hessian-kernel",
            "hessian-full",
            "hessian-q8",
            "hessian-c4",
        ):
            return GroupSpec(head)
        if head == "imprimitive-c3":
            p = self.params(["n", "s"])
            return ImprimitiveZn2C3(p["n"], p["s"])
        if head == "gnks":
            p = self.params(["n", "k", "s"])
            return Gnks(p["n"], p["k"], p["s"])
        if head == "imprimitive-s3":
            p = self.params(["n"])
            return ImprimitiveZn2S3(p["n"])
        if head in ("f4n", "g4n"):
            p = self.params(["n"])
            return GroupSpec(head, n=p["n"])
        if head in ("h4n", "i4n", "j4n"):
            p = self.params(["n", "p"])
            return GroupSpec(head, n=p["n"], p=p["p"])
        if head == "diagonal-f0":
            return DiagonalF0(self.sub())
        if head == "product-f0":
            return ProductF0(self.sub(), self.sub())
        if head == "sym2":
            return Sym2Lift(self.sub())
        if head == "explicit":
            kind = self.take()
            mats = []
            while self.peek() == "[":
                self.take()
                body = []
                while self.peek() not in ("]", None):
                    body.append(self.take())
                if self.take() != "]":
                    raise GroupSpecError("unterminated matrix literal")
                mats.append(_parse_matrix("".join(body)))
            if not mats:
                raise GroupSpecError("explicit: no matrices given")
            return Explicit(kind, mats)
        raise GroupSpecError(f"unknown group kind {head!r}")


def parse_group_spec(text: str) -> GroupSpec:
    return _SpecParser(_tokenize(text)).parse()
