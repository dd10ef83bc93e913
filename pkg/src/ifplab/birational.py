"""Cyclic quotient surface germs 1/r(p, q), their behaviour under blowing
up, Hirzebruch-Jung continued fractions, and discrepancies of exceptional
chains.  Everything is exact integer / rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class Germ:
    """The germ C^2 / (Z/r) where the generator acts with weights
    (eps_r^p, eps_r^q).  Not necessarily faithful or isolated."""

    r: int
    p: int
    q: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("germ order must be positive")
        object.__setattr__(self, "p", self.p % self.r)
        object.__setattr__(self, "q", self.q % self.r)

    def is_faithful(self) -> bool:
        return gcd(self.r, gcd(self.p, self.q)) == 1 and self._kernel_index() == 1

    def _kernel_index(self) -> int:
        # size of the subgroup acting trivially
        r, p, q = self.r, self.p, self.q
        a = r // gcd(r, p)
        b = r // gcd(r, q)
        return r // (a * b // gcd(a, b))

    def faithful(self) -> "Germ":
        """Quotient by the kernel of the action."""
        k = self._kernel_index()
        if k == 1:
            return self
        return Germ(self.r // k, self.p // k, self.q // k)

    def is_isolated(self) -> bool:
        """Fixed point isolated: no nontrivial element fixes a curve,
        i.e. gcd(r, p) = gcd(r, q) = 1 after making the action faithful."""
        g = self.faithful()
        return gcd(g.r, g.p) == 1 and gcd(g.r, g.q) == 1


def normalize_germ(germ: Germ) -> Germ:
    """Put a germ with gcd(r, p) = 1 in the standard form 1/r(1, a)."""
    g = germ.faithful()
    if gcd(g.r, g.p) != 1:
        raise ValueError("normalization needs the first weight prime to r")
    a = (g.q * pow(g.p, -1, g.r)) % g.r
    return Germ(g.r, 1 % g.r, a)


def blowup_germ(germ: Germ) -> tuple[Germ, Germ]:
    """Blow up the origin of C^2 and read off the two germs at the fixed
    points of the exceptional line: 1/r(p, q-p) and 1/r(p-q, q), each made
    faithful."""
    r, p, q = germ.r, germ.p, germ.q
    return Germ(r, p, q - p).faithful(), Germ(r, p - q, q).faithful()


def separation_exponent(germ: Germ, cap_factor: int = 2) -> int:
    """Least t >= 0 such that after t blow-ups the branch carrying the
    first weight separates: gcd(r, (t+1) p - q) = 1.  Searches t < cap
    with cap = cap_factor * r and raises if none is found."""
    g = germ.faithful()
    r, p, q = g.r, g.p, g.q
    if gcd(r, p) != 1:
        raise ValueError("separation exponent needs gcd(r, p) = 1")
    for t in range(cap_factor * r + 1):
        if gcd(r, (t + 1) * p - q) == 1:
            return t
    raise ArithmeticError(f"no separation exponent below {cap_factor * r} for {g}")


def hj_expand(r: int, a: int) -> list[int]:
    """Hirzebruch-Jung continued fraction r/a = b1 - 1/(b2 - 1/(...)),
    all b_i >= 2.  Needs 0 < a < r and gcd(r, a) = 1."""
    if not (0 < a < r):
        raise ValueError("need 0 < a < r")
    if gcd(r, a) != 1:
        raise ValueError("need gcd(r, a) = 1")
    chain = []
    while a:
        b = -(-r // a)  # ceil
        chain.append(b)
        r, a = a, b * a - r
    return chain


def hj_contract(chain: list[int]) -> tuple[int, int]:
    """Inverse of hj_expand: [b1, ..., bk] -> (r, a)."""
    if not chain:
        raise ValueError("empty chain")
    if any(b < 2 for b in chain):
        raise ValueError("chain entries must be >= 2")
    x = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        x = b - 1 / x
    return x.numerator, x.denominator


def intersection_matrix(self_ints, edges=None):
    """Symmetric intersection matrix from self-intersections and (by
    default) consecutive-chain adjacency; `edges` overrides adjacency."""
    k = len(self_ints)
    if edges is None:
        edges = [(i, i + 1) for i in range(k - 1)]
    m = [[0] * k for _ in range(k)]
    for i, s in enumerate(self_ints):
        m[i][i] = s
    for i, j in edges:
        m[i][j] += 1
        m[j][i] += 1
    return m


def is_negative_definite(m) -> bool:
    """Leading principal minors alternate in sign starting negative."""
    k = len(m)
    for t in range(1, k + 1):
        minor = _det_fraction([row[:t] for row in m[:t]])
        if minor * (-1) ** t <= 0:
            return False
    return True


def _det_fraction(m) -> Fraction:
    m = [[Fraction(x) for x in row] for row in m]
    k = len(m)
    det = Fraction(1)
    for col in range(k):
        pivot = None
        for i in range(col, k):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, k):
            f = m[i][col] * inv
            if f:
                for j in range(col, k):
                    m[i][j] -= f * m[col][j]
    return det


def discrepancies(self_ints, edges=None) -> list[Fraction]:
    """Discrepancy coefficients a_i in [0, 1) for contracting a negative
    definite configuration of rational curves: the a_i solve
    sum_i a_i (E_i . E_j) = E_j^2 + 2 for every j (adjunction with
    K_downstairs pulled back plus sum a_i E_i)."""
    m = intersection_matrix(self_ints, edges)
    if not is_negative_definite(m):
        raise ValueError("configuration is not negative definite")
    k = len(m)
    rhs = [Fraction(m[j][j] + 2) for j in range(k)]
    a = _solve_fraction(m, rhs)
    for x in a:
        if not (0 <= x < 1):
            raise ArithmeticError(f"discrepancy {x} out of [0, 1)")
    return a


def _solve_fraction(m, rhs):
    k = len(m)
    aug = [[Fraction(x) for x in row] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(k):
        pivot = next(i for i in range(col, k) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][k] for i in range(k)]


def resolve_germ(r: int, a: int):
    """Resolution data of the cyclic quotient 1/r(1, a): the chain of
    self-intersections -b_i and the discrepancies."""
    chain = hj_expand(r, a)
    self_ints = [-b for b in chain]
    return {
        "chain": chain,
        "self_intersections": self_ints,
        "discrepancies": discrepancies(self_ints),
    }
