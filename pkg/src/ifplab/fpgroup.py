"""Finitely presented groups: coset enumeration (HLT style with
coincidence handling), integer Smith normal form, abelianization, and the
presentations of the fundamental groups of the singularity links we care
about."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

DEFAULT_COSET_CAP = 10**6


@dataclass(frozen=True)
class Presentation:
    """Generators are named; relators are words: tuples of (gen, exp) with
    integer exponents."""

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...]

    def gen_index(self, name: str) -> int:
        return self.generators.index(name)


def word(*pairs) -> tuple:
    return tuple(pairs)


@dataclass(frozen=True)
class Complete:
    order: int


@dataclass(frozen=True)
class Overflow:
    cap: int


def _letters(pres: Presentation):
    """Flatten relators into letter sequences; letter 2i is generator i,
    letter 2i+1 its inverse."""
    out = []
    for rel in pres.relators:
        seq = []
        for name, exp in rel:
            i = pres.gen_index(name)
            if exp >= 0:
                seq.extend([2 * i] * exp)
            else:
                seq.extend([2 * i + 1] * (-exp))
        out.append(seq)
    return out


def todd_coxeter(pres: Presentation, cap: int = DEFAULT_COSET_CAP):
    """Enumerate cosets of the trivial subgroup.  Returns Complete(order)
    or Overflow(cap)."""
    ngen = len(pres.generators)
    ncols = 2 * ngen
    relators = _letters(pres)

    table = [[None] * ncols]
    p = [0]  # union-find for coincidences
    dead = [False]

    def rep(a):
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def inv(x):
        return x ^ 1

    merge_queue = []

    def set_entry(a, x, b):
        table[a][x] = b
        table[b][inv(x)] = a

    def merge(a, b):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        p[b] = a
        dead[b] = True
        merge_queue.append(b)

    def process_merges():
        while merge_queue:
            b = merge_queue.pop()
            for x in range(ncols):
                c = table[b][x]
                if c is None:
                    continue
                table[b][x] = None
                c = rep(c)
                a = rep(b)
                if table[a][x] is None:
                    # transplant, guarding the inverse slot
                    d = table[c][inv(x)]
                    if d is not None and rep(d) != a:
                        merge(rep(d), a)
                    set_entry(a, x, c)
                else:
                    merge(table[a][x], c)

    def define(a, x):
        table.append([None] * ncols)
        p.append(len(table) - 1)
        dead.append(False)
        b = len(table) - 1
        set_entry(a, x, b)
        return b

    def scan_and_fill(a, rel):
        while True:
            a = rep(a)
            # scan forward
            f, i = a, 0
            while i < len(rel):
                nxt = table[f][rel[i]]
                if nxt is None:
                    break
                f = rep(nxt)
                i += 1
            if i == len(rel):
                if f != a:
                    merge(f, a)
                    process_merges()
                return
            # scan backward
            b, j = a, len(rel)
            while j > i:
                nxt = table[b][inv(rel[j - 1])]
                if nxt is None:
                    break
                b = rep(nxt)
                j -= 1
            if j == i + 1:
                set_entry(f, rel[i], b)
                return
            if j == i:
                merge(f, b)
                process_merges()
                return
            define(f, rel[i])

    a = 0
    while a < len(table):
        if dead[a] or rep(a) != a:
            a += 1
            continue
        for rel in relators:
            if dead[a] or rep(a) != a:
                break
            scan_and_fill(a, rel)
        if dead[a] or rep(a) != a:
            a += 1
            continue
        for x in range(ncols):
            if dead[a] or rep(a) != a:
                break
            if table[a][x] is None:
                define(a, x)
                if len(table) > cap:
                    return Overflow(cap)
        a += 1

    live = sum(1 for i in range(len(table)) if rep(i) == i)
    return Complete(live)


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(mat):
    """Exact integer Smith normal form.  Returns (d, U, V) with
    U @ mat @ V = diag(d), U and V unimodular, d nonnegative with each
    entry dividing the next."""
    a = [list(map(int, row)) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, f):  # row_i -= f * row_j
        for t in range(cols):
            a[i][t] -= f * a[j][t]
        for t in range(rows):
            u[i][t] -= f * u[j][t]

    def col_op(i, j, f):  # col_i -= f * col_j
        for t in range(rows):
            a[t][i] -= f * a[t][j]
        for t in range(cols):
            v[t][i] -= f * v[t][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for t in range(rows):
            a[t][i], a[t][j] = a[t][j], a[t][i]
        for t in range(cols):
            v[t][i], v[t][j] = v[t][j], v[t][i]

    k = 0
    while k < min(rows, cols):
        # find a nonzero pivot
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j]:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            cleared = True
            for i in range(k + 1, rows):
                if a[i][k]:
                    f = a[i][k] // a[k][k]
                    row_op(i, k, f)
                    if a[i][k]:
                        swap_rows(k, i)
                        cleared = False
            for j in range(k + 1, cols):
                if a[k][j]:
                    f = a[k][j] // a[k][k]
                    col_op(j, k, f)
                    if a[k][j]:
                        swap_cols(k, j)
                        cleared = False
            if cleared:
                break
        k += 1

    # enforce divisibility
    n = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if y % max(x, 1) if x else y:
                pass
            if x and y % x:
                # fold a[i+1][i+1] into the pivot via gcd
                col_op(i, i + 1, -1)  # col_i += col_{i+1}
                # re-clear the 2x2 block
                while a[i + 1][i]:
                    f = a[i + 1][i] // a[i][i] if a[i][i] else 0
                    if a[i][i] == 0 or (a[i + 1][i] and abs(a[i + 1][i]) < abs(a[i][i])):
                        swap_rows(i, i + 1)
                        continue
                    row_op(i + 1, i, f)
                while a[i][i + 1]:
                    f = a[i][i + 1] // a[i][i]
                    col_op(i + 1, i, f)
                changed = True

    d = []
    for i in range(n):
        x = a[i][i]
        if x < 0:
            x = -x
            for t in range(cols):
                v[t][i] = -v[t][i]
            a[i][i] = x
        d.append(x)
    return d, u, v


def abelianization(pres: Presentation):
    """Invariant factors (excluding 1s) and free rank of G^ab, from the
    Smith normal form of the relator exponent matrix."""
    ngen = len(pres.generators)
    mat = []
    for rel in pres.relators:
        row = [0] * ngen
        for name, exp in rel:
            row[pres.gen_index(name)] += exp
        mat.append(row)
    if not mat:
        return [], ngen
    d, _, _ = smith_normal_form(mat)
    torsion = [x for x in d if x not in (0, 1)]
    rank = ngen - sum(1 for x in d if x != 0)
    return torsion, rank


# ---------------------------------------------------------------------------
# the link presentations


def cyclic_link_presentation(r: int) -> Presentation:
    return Presentation(("x",), ((("x", r),),))


def mumford_presentation(p: int, q: int) -> Presentation:
    """Fundamental group of the link of the cone singularity glued from a
    degree-q curve system over a p-fold base: generators a, b and one c_j
    per branch, with a^p, b^(pq - q), c_j^p, a c_j, b c_j^-1."""
    if p < 1 or q < 1:
        raise ValueError("parameters must be positive")
    gens = ["a", "b"] + [f"c{j}" for j in range(1, q + 1)]
    relators = [word(("a", p)), word(("b", p * q - q))]
    for j in range(1, q + 1):
        c = f"c{j}"
        relators.append(word((c, p)))
        relators.append(word(("a", 1), (c, 1)))
        relators.append(word(("b", 1), (c, -1)))
    return Presentation(tuple(gens), tuple(relators))


def mumford_expected_order(p: int, q: int):
    """Eliminating c_j = a^-1 = b gives a cyclic group; its order, or None
    when the group is infinite (never happens for positive p, q)."""
    return gcd(p, q * (p - 1))
