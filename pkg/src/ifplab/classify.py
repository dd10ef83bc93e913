"""Group-theoretic side of the classification: when are all abelian
subgroups cyclic, which clause of the classification a spec falls under,
and the first-homology closure test for the abelian members."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .groups import (
    FiniteGroup,
    GroupSpecError,
    element_order,
    factor_intersections,
    generated_subgroup,
    is_abelian_set,
    is_cyclic_set,
)


def _prime_divisors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_subgroups_cyclic(group: FiniteGroup) -> bool:
    """True iff every abelian subgroup is cyclic.  Equivalent to: no
    commuting pair of order-p elements generates (Z/p)^2, for any prime p."""
    orders = [(g, element_order(g, cap=group.order + 1)) for g in group.elements]
    for p in _prime_divisors(group.order):
        p_els = [g for g, o in orders if o == p]
        for i, g in enumerate(p_els):
            powers = {g.key()}
            acc = g
            for _ in range(p - 1):
                acc = acc.mul(g)
                powers.add(acc.key())
            for h in p_els[i + 1 :]:
                if h.key() in powers:
                    continue
                if g.mul(h).key() == h.mul(g).key():
                    return False
    return True


def abelian_subgroups_cyclic_oracle(group: FiniteGroup) -> bool:
    """Slow reference: enumerate every subgroup generated by at most two
    elements and test abelian => cyclic directly."""
    els = group.elements
    seen = set()
    for i in range(len(els)):
        for j in range(i, len(els)):
            sub = generated_subgroup([els[i], els[j]])
            key = frozenset(e.key() for e in sub)
            if key in seen:
                continue
            seen.add(key)
            if is_abelian_set(sub) and not is_cyclic_set(sub):
                return False
    return True


def coprime_factor_condition(group: FiniteGroup) -> bool:
    """For an untwisted group on P^1 x P^1: the two factor intersections
    have coprime orders."""
    o1, o2, idx = factor_intersections(group)
    if idx != 1:
        raise GroupSpecError("coprime factor condition needs an untwisted group")
    return gcd(o1, o2) == 1


@dataclass(frozen=True)
class ClauseLabel:
    clause: int  # 0 = not on the list
    detail: str = ""

    @property
    def listed(self) -> bool:
        return self.clause != 0


NOT_LISTED = ClauseLabel(0, "not-listed")


def clause_label(spec, group: FiniteGroup) -> ClauseLabel:
    """Which clause of the classification the built action falls under.
    Overlaps resolve to the lowest clause number."""
    tag = spec.tag if spec is not None else None

    # clause 1: linear plane action with all abelian subgroups cyclic
    if group.kind == "linear2" and abelian_subgroups_cyclic(group):
        return ClauseLabel(1, "gl2-abelian-subgroups-cyclic")

    # clause 2: untwisted action on the quadric with coprime factor intersections
    if group.kind == "wreath" and not any(e.swap for e in group.elements):
        if coprime_factor_condition(group):
            return ClauseLabel(2, "untwisted-coprime-factors")

    # clause 3: the order-3n monomial plane groups (odd n)
    if tag == "imprimitive-c3" and spec.kw["n"] % 2 == 1:
        return ClauseLabel(3, "monomial-3n")

    # clause 4: the twisted order-4n families on the quadric
    if tag in ("f4n", "g4n", "h4n", "i4n", "j4n"):
        return ClauseLabel(4, tag)

    # clause 5: the Hessian subgroups (Z/3)^2 : {2, 4, Q8}
    if tag in ("hessian-kernel", "hessian-c4", "hessian-q8"):
        return ClauseLabel(5, tag)

    return NOT_LISTED


def h1_corollary_check(invariant_factors) -> bool:
    """Whether an abelian group (given by its invariant factor chain
    d1 | d2 | ... ) is allowed as the first homology of a resolution in
    the classification: cyclic Z/m, (Z/3)^2, Z/3 x Z/6, or Z/2 x Z/n with
    n = 4 or n = 2 mod 4."""
    fs = [int(d) for d in invariant_factors if int(d) != 1]
    if len(fs) <= 1:
        return True  # trivial or cyclic
    if len(fs) != 2:
        return False
    a, b = fs
    if a > b:
        a, b = b, a
    if b % a:
        raise ValueError("invariant factors must form a divisibility chain")
    if (a, b) == (3, 3) or (a, b) == (3, 6):
        return True
    if a == 2 and (b == 4 or b % 4 == 2):
        return True
    return False


def abelian_invariants(group: FiniteGroup):
    """Invariant factor chain of a finite abelian group, pinned down by
    order-dividing element counts."""
    if not group.is_abelian():
        raise GroupSpecError("abelian_invariants needs an abelian group")
    n = group.order
    orders = [element_order(g, cap=n + 1) for g in group.elements]
    exponent = 1
    for o in orders:
        exponent = exponent * o // gcd(exponent, o)

    def count_dividing(m, chain):
        total = 1
        for d in chain:
            total *= gcd(m, d)
        return total

    actual = {m: sum(1 for o in orders if m % o == 0) for m in _divisors(exponent)}

    def candidates(remaining, max_d):
        # divisor chains with product `remaining`, each factor dividing the next
        if remaining == 1:
            yield []
            return
        for d in _divisors(remaining):
            if d > 1 and d <= max_d and max_d % d == 0:
                for rest in candidates(remaining // d, d):
                    yield rest + [d]

    for chain in candidates(n, exponent):
        if not chain or chain[-1] != exponent:
            continue
        if all(count_dividing(m, chain) == actual[m] for m in actual):
            return tuple(chain)
    raise ArithmeticError("no abelian structure matched element order counts")


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out
