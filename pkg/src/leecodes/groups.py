"""Finite Abelian groups as products of cyclic groups.

A group is an ordered tuple of cyclic factor sizes; elements are reduced
residue tuples of the same length.  The trivial group is the empty
product.  Ranking follows the nested (Horner) evaluation of the
lexicographic order over the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod

from sympy import factorint

from .errors import DomainError, StructuralError


@dataclass(frozen=True)
class FiniteAbelianGroup:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(t) for t in self.factors))
        if any(t < 2 for t in self.factors):
            raise DomainError(f"cyclic factors must be >= 2: {self.factors}")

    @property
    def order(self):
        return prod(self.factors)

    @property
    def identity(self):
        return (0,) * len(self.factors)

    def contains(self, a):
        return len(a) == len(self.factors) and all(
            0 <= x < t for x, t in zip(a, self.factors)
        )

    def reduce(self, a):
        if len(a) != len(self.factors):
            raise StructuralError("element length does not match factors")
        return tuple(x % t for x, t in zip(a, self.factors))

    def add(self, a, b):
        return tuple((x + y) % t for x, y, t in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % t for x, t in zip(a, self.factors))

    def scale(self, k, a):
        return tuple((k * x) % t for x, t in zip(a, self.factors))

    def elements(self):
        """All elements in lexicographic order."""
        return product(*(range(t) for t in self.factors))


def element_order(g, G):
    """Least m >= 1 with m*g = identity."""
    if not G.contains(g):
        raise StructuralError(f"{g} is not an element of {G.factors}")
    return lcm(*(t // gcd(t, x) for t, x in zip(G.factors, g))) if G.factors else 1


def _partitions_desc(k):
    """Partitions of k as tuples with decreasing parts, largest part first."""
    if k == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(k, k)


def enumerate_abelian_groups(m):
    """One representative per isomorphism class of Abelian groups of order m.

    Canonical order: primes ascending, exponent partitions in decreasing
    part order; the resulting list is sorted lexicographically by factor
    sequence.
    """
    if m < 1:
        raise DomainError(f"order must be >= 1, got {m}")
    per_prime = []
    for p, e in sorted(factorint(m).items()):
        per_prime.append([tuple(p ** part for part in pt) for pt in _partitions_desc(e)])
    groups = []
    for combo in product(*per_prime):
        factors = tuple(f for chunk in combo for f in chunk)
        groups.append(FiniteAbelianGroup(factors))
    return sorted(groups, key=lambda G: G.factors)


def lex_rank(a, G):
    """1-based rank of a in the lexicographic element order (Horner form)."""
    if not G.contains(a):
        raise StructuralError(f"{a} is not an element of {G.factors}")
    acc = 0
    for t, x in zip(G.factors, a):
        acc = acc * t + x
    return acc + 1


def lex_unrank(rank, G):
    """Inverse of lex_rank."""
    if not 1 <= rank <= G.order:
        raise DomainError(f"rank {rank} out of range 1..{G.order}")
    acc = rank - 1
    digits = []
    for t in reversed(G.factors):
        acc, x = divmod(acc, t)
        digits.append(x)
    return tuple(reversed(digits))
