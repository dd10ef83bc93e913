"""Exact arithmetic in cyclotomic fields, plus the small amount of linear
algebra the rest of the package needs (2x2 and 3x3 matrices over Q(zeta_N),
characteristic polynomials, eigenspaces for root-of-unity eigenvalues).

A field element is stored as its coordinate vector on the power basis
1, z, ..., z^(phi(N)-1) of Q[z]/(Phi_N), so equal numbers have equal
coordinate tuples and hashing/equality are structural.  No floating point
anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction

MAX_CONDUCTOR = 240


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("conductor must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # exact division of integer polynomials, den monic; coeffs ascending
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def _phi_int(n: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the n-th cyclotomic polynomial,
    computed by peeling divisors off x^n - 1."""
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, list(_phi_int(d)))
            if any(rem[1:]) or rem[0] != 0:
                raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int, k: int) -> tuple[int, ...]:
    """x^k reduced mod Phi_n, as an integer coefficient tuple of length phi(n)."""
    d = euler_phi(n)
    if k < d:
        row = [0] * d
        row[k] = 1
        return tuple(row)
    prev = _power_table(n, k - 1)
    shifted = [0] + list(prev)
    phi = _phi_int(n)
    lead = shifted.pop()  # coefficient of x^d
    if lead:
        for i in range(d):
            shifted[i] -= lead * phi[i]
    return tuple(shifted)


class CycloNum:
    """An element of Q(zeta_n) on the power basis of Q[z]/(Phi_n)."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.c = tuple(coeffs)
        if len(self.c) != euler_phi(n):
            raise ValueError("coefficient vector has wrong length")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def rational(q) -> "CycloNum":
        return CycloNum(1, (Fraction(q),))

    @staticmethod
    def zero(n: int = 1) -> "CycloNum":
        return CycloNum(n, (Fraction(0),) * euler_phi(n))

    @staticmethod
    def one(n: int = 1) -> "CycloNum":
        c = [Fraction(0)] * euler_phi(n)
        c[0] = Fraction(1)
        return CycloNum(n, c)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CycloNum":
        """zeta_n^k, stored at the smallest conductor n/gcd(n,k)."""
        if n < 1:
            raise ValueError("bad root-of-unity order")
        k %= n
        g = gcd(n, k)
        if g > 1:
            n, k = n // g, k // g
        if n == 1:
            return CycloNum.rational(1)
        if n == 2:
            return CycloNum.rational(-1)
        return CycloNum._from_power(n, k)

    @staticmethod
    def _from_power(n: int, k: int) -> "CycloNum":
        return CycloNum(n, [Fraction(v) for v in _power_table(n, k)])

    # -- conductor management --------------------------------------------

    def coerce(self, n: int) -> "CycloNum":
        """Rewrite this element in Q(zeta_n); requires self.n | n."""
        if n == self.n:
            return self
        if n % self.n or n > MAX_CONDUCTOR:
            raise ValueError(f"cannot coerce conductor {self.n} into {n}")
        step = n // self.n
        d = euler_phi(n)
        out = [Fraction(0)] * d
        for i, a in enumerate(self.c):
            if a:
                for j, v in enumerate(_power_table(n, i * step)):
                    if v:
                        out[j] += a * v
        return CycloNum(n, out)

    @staticmethod
    def _align(a: "CycloNum", b: "CycloNum"):
        if a.n == b.n:
            return a, b
        m = a.n * b.n // gcd(a.n, b.n)
        return a.coerce(m), b.coerce(m)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        other = _as_cy(other)
        a, b = CycloNum._align(self, other)
        return CycloNum(a.n, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-_as_cy(other))

    def __rsub__(self, other):
        return _as_cy(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        other = _as_cy(other)
        a, b = CycloNum._align(self, other)
        d = euler_phi(a.n)
        # work over a common integer denominator; one gcd per output
        # coefficient instead of one per partial product
        da = db = 1
        for x in a.c:
            da = da * x.denominator // gcd(da, x.denominator)
        for y in b.c:
            db = db * y.denominator // gcd(db, y.denominator)
        na = [x.numerator * (da // x.denominator) for x in a.c]
        nb = [y.numerator * (db // y.denominator) for y in b.c]
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            if conv[k]:
                for j, v in enumerate(_power_table(a.n, k)):
                    if v:
                        out[j] += conv[k] * v
        den = da * db
        return CycloNum(a.n, [Fraction(v, den) for v in out])

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Extended euclidean algorithm against Phi_n in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.n == 1:
            return CycloNum(1, (1 / self.c[0],))
        r0 = [Fraction(v) for v in _phi_int(self.n)]
        r1 = list(self.c)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if len(r1) == 1:
                if r1[0] == 0:
                    raise ZeroDivisionError("element not invertible (bad basis vector)")
                inv = 1 / r1[0]
                d = euler_phi(self.n)
                out = [v * inv for v in s1] + [Fraction(0)] * d
                # s1 may exceed the basis length before reduction
                res = [Fraction(0)] * d
                for k, v in enumerate(out[: len(s1)]):
                    if v:
                        for j, w in enumerate(_power_table(self.n, k)):
                            if w:
                                res[j] += v * w
                return CycloNum(self.n, res)
            q, r = _poly_divmod_frac(r0, r1)
            s_new = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s_new

    def __truediv__(self, other):
        return self * _as_cy(other).inverse()

    def __rtruediv__(self, other):
        return _as_cy(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and all(x == 0 for x in self.c[1:])

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.c[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        a, b = CycloNum._align(self, other)
        return a.c == b.c

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        if self.is_rational():
            return str(self.c[0])
        terms = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                z = f"z{self.n}" + (f"^{i}" if i > 1 else "")
                terms.append(z if a == 1 else f"{a}*{z}")
        return " + ".join(terms) if terms else "0"


def _as_cy(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum.rational(x)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")


# -- rational polynomial helpers used by inversion -----------------------


def _poly_divmod_frac(num, den):
    num = list(num)
    dn = len(den) - 1
    inv = 1 / den[-1]
    q = [Fraction(0)] * max(len(num) - dn, 1)
    for i in range(len(num) - dn - 1, -1, -1):
        c = num[i + dn] * inv
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


class Polynomial:
    """Polynomial with CycloNum coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_cy(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> CycloNum:
        x = _as_cy(x)
        acc = CycloNum.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Polynomial(" + ", ".join(map(repr, self.coeffs)) + ")"


def cyclotomic_polynomial(n: int) -> Polynomial:
    return Polynomial([Fraction(v) for v in _phi_int(n)])


# -- matrices -------------------------------------------------------------


class Matrix:
    """Small square matrix over a cyclotomic field (sizes 2 and 3)."""

    __slots__ = ("rows", "k")

    def __init__(self, rows):
        self.rows = tuple(tuple(_as_cy(e) for e in r) for r in rows)
        self.k = len(self.rows)
        if any(len(r) != self.k for r in self.rows):
            raise ValueError("matrix must be square")
        if self.k not in (2, 3):
            raise ValueError("only 2x2 and 3x3 matrices are supported")

    @staticmethod
    def identity(k: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @staticmethod
    def diagonal(entries) -> "Matrix":
        k = len(entries)
        return Matrix([[entries[i] if i == j else 0 for j in range(k)] for i in range(k)])

    def conductor(self) -> int:
        n = 1
        for r in self.rows:
            for e in r:
                n = n * e.n // gcd(n, e.n)
        return n

    def coerce(self, n: int) -> "Matrix":
        return Matrix([[e.coerce(n) for e in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            k = self.k
            return Matrix(
                [
                    [
                        sum((self.rows[i][t] * other.rows[t][j] for t in range(k)), CycloNum.zero())
                        for j in range(k)
                    ]
                    for i in range(k)
                ]
            )
        return Matrix([[e * other for e in r] for r in self.rows])

    __rmul__ = __mul__

    def __sub__(self, other):
        return Matrix(
            [
                [self.rows[i][j] - other.rows[i][j] for j in range(self.k)]
                for i in range(self.k)
            ]
        )

    def apply(self, vec):
        return tuple(
            sum((self.rows[i][j] * vec[j] for j in range(self.k)), CycloNum.zero())
            for i in range(self.k)
        )

    def trace(self) -> CycloNum:
        return sum((self.rows[i][i] for i in range(self.k)), CycloNum.zero())

    def det(self) -> CycloNum:
        r = self.rows
        if self.k == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def inverse(self) -> "Matrix":
        d = self.det()
        if d.is_zero():
            raise ZeroDivisionError("matrix not invertible")
        di = d.inverse()
        r = self.rows
        if self.k == 2:
            return Matrix(
                [[r[1][1] * di, -r[0][1] * di], [-r[1][0] * di, r[0][0] * di]]
            )
        cof = [
            [
                r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                for i in range(3)
            ]
            for j in range(3)
        ]  # transposed cofactors
        return Matrix([[c * di for c in row] for row in cof])

    def power(self, m: int) -> "Matrix":
        if m < 0:
            return self.inverse().power(-m)
        acc = Matrix.identity(self.k)
        base = self
        while m:
            if m & 1:
                acc = acc * base
            base = base * base
            m >>= 1
        return acc

    def is_identity(self) -> bool:
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(self.k)
            for j in range(self.k)
        )

    def is_scalar(self) -> bool:
        a = self.rows[0][0]
        return all(
            self.rows[i][j] == (a if i == j else CycloNum.zero())
            for i in range(self.k)
            for j in range(self.k)
        )

    def scalar_canonical(self) -> "Matrix":
        """Scale so the first nonzero entry (row-major) is 1."""
        for r in self.rows:
            for e in r:
                if not e.is_zero():
                    return self * e.inverse()
        raise ValueError("zero matrix has no projective representative")

    def char_poly(self) -> Polynomial:
        t = self.trace()
        d = self.det()
        if self.k == 2:
            return Polynomial([d, -t, CycloNum.one()])
        r = self.rows
        m2 = sum(
            (
                r[i][i] * r[j][j] - r[i][j] * r[j][i]
                for i in range(3)
                for j in range(i + 1, 3)
            ),
            CycloNum.zero(),
        )
        return Polynomial([-d, m2, -t, CycloNum.one()])

    def rank(self) -> int:
        return len(_row_echelon([list(r) for r in self.rows]))

    def kernel_basis(self):
        """Basis of the right kernel, as tuples of CycloNum."""
        rows = _row_echelon([list(r) for r in self.rows])
        k = self.k
        pivots = []
        for row in rows:
            for j in range(k):
                if not row[j].is_zero():
                    pivots.append(j)
                    break
        free = [j for j in range(k) if j not in pivots]
        basis = []
        for f in free:
            vec = [CycloNum.zero() for _ in range(k)]
            vec[f] = CycloNum.one()
            for row, p in zip(reversed(rows), reversed(pivots)):
                s = sum((row[j] * vec[j] for j in range(p + 1, k)), CycloNum.zero())
                vec[p] = -s * row[p].inverse()
            basis.append(tuple(vec))
        return basis

    def entries_key(self):
        return tuple(e for r in self.rows for e in r)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.k == other.k and all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.k)
            for j in range(self.k)
        )

    def __hash__(self):
        return hash(self.entries_key())

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(map(repr, r)) + "]" for r in self.rows) + "])"


def _row_echelon(rows):
    """Gaussian elimination over the field; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    out = []
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rows and pivot_col < cols:
        pick = None
        for i, r in enumerate(rows):
            if not r[pivot_col].is_zero():
                pick = i
                break
        if pick is None:
            pivot_col += 1
            continue
        piv = rows.pop(pick)
        inv = piv[pivot_col].inverse()
        piv = [e * inv for e in piv]
        out.append(piv)
        for r in rows:
            c = r[pivot_col]
            if not c.is_zero():
                for j in range(cols):
                    r[j] = r[j] - c * piv[j]
        pivot_col += 1
    return out


def linear_order(m: Matrix, cap: int = 1000) -> int:
    """Least t >= 1 with m^t = I; raises if no such t <= cap."""
    acc = m
    for t in range(1, cap + 1):
        if acc.is_identity():
            return t
        acc = acc * m
    raise ValueError("matrix has no finite linear order within cap; rescale it")


def unity_eigendata(m: Matrix, order: int):
    """Eigenvalues (all roots of unity since m^order = I) with their
    eigenspace dimensions, as a list of (CycloNum, dim) sorted by the
    exponent of the root.  Verifies m^order = I and that dims sum to k."""
    if not m.power(order).is_identity():
        raise ValueError("matrix does not have the stated order")
    n = m.conductor()
    big = n * order // gcd(n, order)
    mm = m.coerce(big)
    out = []
    total = 0
    for j in range(order):
        lam = CycloNum.zeta(order, j).coerce(big)
        shifted = mm - Matrix.identity(m.k) * lam
        dim = m.k - shifted.rank()
        if dim:
            out.append((lam, dim))
            total += dim
        if total == m.k:
            break
    if total != m.k:
        raise ArithmeticError("eigenvalues do not exhaust the space")
    return out


def eigenspace(m: Matrix, lam: CycloNum):
    big = m.conductor()
    big = big * lam.n // gcd(big, lam.n)
    mm = m.coerce(big)
    return (mm - Matrix.identity(m.k) * lam.coerce(big)).kernel_basis()
