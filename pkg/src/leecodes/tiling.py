"""Lattice tilings of Z^n through group homomorphisms.

A homomorphism Z^n -> G is determined by the images of the unit vectors.
The restriction being a bijection on a tile V is equivalent to the
kernel lattice tiling Z^n by V; this module provides the bijection
check, an exact kernel-basis extraction, the tiling period, a
finite-window exact-cover oracle, and the exhaustive search over groups
and image assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm

from sympy import isprime

from .errors import (
    ConstructionError,
    DimensionError,
    SizeError,
    StructuralError,
)
from .groups import FiniteAbelianGroup, element_order, enumerate_abelian_groups


@dataclass(frozen=True)
class Homomorphism:
    """Images of e_1..e_n in G; half_image, when set, is the image of (1/2)e_1."""

    group: FiniteAbelianGroup
    images: tuple
    half_image: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(g) for g in self.images))
        for g in self.images:
            if not self.group.contains(g):
                raise StructuralError(f"image {g} not in group {self.group.factors}")
        if self.half_image is not None:
            h = tuple(self.half_image)
            object.__setattr__(self, "half_image", h)
            if not self.group.contains(h):
                raise StructuralError("half image not in group")
            if self.group.add(h, h) != self.images[0]:
                raise StructuralError("half image does not double to the e_1 image")

    @property
    def n(self):
        return len(self.images)


@dataclass(frozen=True)
class KernelBasis:
    rows: tuple
    det_abs: int


def apply_hom(hom, a):
    """phi(a) = sum a_i * phi(e_i), reduced componentwise in G."""
    if len(a) != hom.n:
        raise DimensionError(f"word length {len(a)} != {hom.n}")
    factors = hom.group.factors
    return tuple(
        sum(ai * g[j] for ai, g in zip(a, hom.images)) % t
        for j, t in enumerate(factors)
    )


def apply_hom_sparse(hom, items):
    """phi of a sparse word given as (index, value) pairs, 0-based indices."""
    factors = hom.group.factors
    out = [0] * len(factors)
    for i, x in items:
        g = hom.images[i]
        for j in range(len(factors)):
            out[j] += x * g[j]
    return tuple(v % t for v, t in zip(out, factors))


def apply_hom_half(hom, hw):
    """phi on the half lattice: hw = (2*x_1, x_2, ..., x_n)."""
    if hom.half_image is None:
        raise StructuralError("homomorphism has no half image")
    if len(hw) != hom.n:
        raise DimensionError(f"word length {len(hw)} != {hom.n}")
    factors = hom.group.factors
    h = hom.half_image
    return tuple(
        (hw[0] * h[j] + sum(x * g[j] for x, g in zip(hw[1:], hom.images[1:]))) % t
        for j, t in enumerate(factors)
    )


def is_bijection_on(hom, words):
    """True iff phi restricted to words is injective (hence onto G)."""
    words = list(words)
    if len(words) != hom.group.order:
        raise SizeError(f"|V| = {len(words)} != |G| = {hom.group.order}")
    seen = set()
    for w in words:
        g = apply_hom(hom, w)
        if g in seen:
            return False
        seen.add(g)
    return True


# --- exact integer elimination -------------------------------------------

def _hnf_rows(mat):
    """Row-style Hermite form: echelon, positive pivots, reduced above."""
    A = [list(r) for r in mat]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if A[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            for i in nz:
                if i == i0:
                    continue
                q = A[i][c] // A[i0][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[i0])]
        nz = [i for i in range(r, nrows) if A[i][c] != 0]
        if not nz:
            continue
        A[r], A[nz[0]] = A[nz[0]], A[r]
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return A


def hnf_lower(rows):
    """Unique lower-triangular Hermite form of a full-rank integer basis.

    Diagonal positive; entries left of the diagonal reduced into
    [0, diagonal of their column).
    """
    flipped = [list(r)[::-1] for r in rows]
    H = _hnf_rows(flipped)
    return tuple(tuple(row[::-1]) for row in reversed(H))


def det_bareiss(mat):
    """Exact determinant by fraction-free elimination."""
    A = [list(r) for r in mat]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[-1][-1]


def kernel_basis(hom):
    """Canonical lower-triangular basis of ker(phi) with |det| = |G|.

    The relation system is lifted by appending one t_j-multiple row per
    group component and reduced by exact integer elimination; the rows
    whose group part vanished project onto the kernel.
    """
    G = hom.group
    n = len(hom.images)
    s = len(G.factors)
    rows = []
    for i, g in enumerate(hom.images):
        rows.append(list(g) + [1 if j == i else 0 for j in range(n)])
    for j, t in enumerate(G.factors):
        rows.append([t if jj == j else 0 for jj in range(s)] + [0] * n)
    H = _hnf_rows(rows)
    kern = [row[s:] for row in H if all(x == 0 for x in row[:s]) and any(row[s:])]
    if len(kern) != n:
        raise ConstructionError(f"kernel rank {len(kern)} != {n}")
    basis = hnf_lower(kern)
    det = 1
    for i in range(n):
        det *= basis[i][i]
    det = abs(det)
    if det != G.order:
        raise ConstructionError(f"|det| = {det} != |G| = {G.order}")
    identity = G.identity
    for row in basis:
        if apply_hom(hom, row) != identity:
            raise ConstructionError(f"basis row {row} not in kernel")
    return KernelBasis(rows=basis, det_abs=det)


def period(hom):
    """Tiling period: lcm of the orders of the generator images."""
    return lcm(*(element_order(g, hom.group) for g in hom.images)) if hom.images else 1


def kernel_points_in_box(hom, bound):
    """All l with |l_i| <= bound and phi(l) = identity, lexicographic.

    Evaluates residues incrementally along the recursion, so each point
    costs O(s) instead of O(n*s).
    """
    factors = hom.group.factors
    s = len(factors)
    n = hom.n
    images = hom.images
    out = []

    def rec(i, acc, prefix):
        if i == n:
            if all(x == 0 for x in acc):
                out.append(tuple(prefix))
            return
        g = images[i]
        cur = [(a - bound * gi) % t for a, gi, t in zip(acc, g, factors)]
        for x in range(-bound, bound + 1):
            rec(i + 1, cur, prefix + [x])
            cur = [(c + gi) % t for c, gi, t in zip(cur, g, factors)]

    rec(0, [0] * s, [])
    return out


def verify_window_tiling(hom, V, R):
    """Exact-cover oracle: every point of [-R,R]^n in exactly one translate.

    Translates are taken over kernel points within R plus the coordinate
    spread of V, which bounds the translation vector of any tile touching
    the window.
    """
    V = list(V)
    n = hom.n
    spread = max(
        max(v[i] for v in V) - min(v[i] for v in V) for i in range(n)
    )
    counts = {}
    for l in kernel_points_in_box(hom, R + spread):
        for v in V:
            p = tuple(a + b for a, b in zip(l, v))
            if all(-R <= x <= R for x in p):
                counts[p] = counts.get(p, 0) + 1
    if len(counts) != (2 * R + 1) ** n:
        return False
    return all(c == 1 for c in counts.values())


# --- exhaustive search ----------------------------------------------------

FOUND = "found"
NOT_FOUND = "not_found"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class SearchResult:
    status: str
    hom: Homomorphism | None
    groups_tried: int
    assignments_tried: int
    nodes: int
    failures: tuple

    def certificate(self):
        if self.status == FOUND:
            return {
                "status": self.status,
                "group": list(self.hom.group.factors),
                "images": [list(g) for g in self.hom.images],
            }
        return {
            "status": self.status,
            "groups_tried": self.groups_tried,
            "assignments_tried": self.assignments_tried,
            "nodes": self.nodes,
        }


def _normalize_tile(V):
    """Translate V so its lexicographic minimum lands on the origin."""
    V = sorted(set(V))
    base = V[0]
    return [tuple(a - b for a, b in zip(w, base)) for w in V]


def search_lattice_tiling(V, budget=DEFAULT_BUDGET, max_failures=1024):
    """Exhaustive search for a homomorphism bijective on V.

    Deterministic: groups in canonical order, image assignments in
    lexicographic element order, first full solution returned.  For a
    cyclic group of prime order the first image is pinned to 1 (every
    nonzero element is a generator, so an automorphism absorbs the
    choice).  NotFound is reported only on true exhaustion.
    """
    V = list(V)
    if not V:
        raise SizeError("tile must be nonempty")
    n = len(V[0])
    W = _normalize_tile(V)
    size = len(W)
    # words of W supported on the first m coordinates, cumulatively
    by_depth = [
        [w for w in W if all(x == 0 for x in w[m:])] for m in range(n + 1)
    ]
    nodes = 0
    assignments = 0
    groups_tried = 0
    failures = []

    for G in enumerate_abelian_groups(size):
        groups_tried += 1
        elems = list(G.elements())
        prime_cyclic = len(G.factors) == 1 and isprime(G.factors[0])
        images = [None] * n

        def dfs(depth):
            nonlocal nodes, assignments
            if depth == n:
                return None
            candidates = [(1,)] if depth == 0 and prime_cyclic else elems
            for g in candidates:
                nodes += 1
                if nodes > budget:
                    return BUDGET_EXCEEDED
                images[depth] = g
                partial = Homomorphism(G, tuple(images[: depth + 1]))
                seen = set()
                ok = True
                for w in by_depth[depth + 1]:
                    img = apply_hom(partial, w[: depth + 1])
                    if img in seen:
                        ok = False
                        break
                    seen.add(img)
                if ok:
                    if depth + 1 == n:
                        assignments += 1
                        return Homomorphism(G, tuple(images))
                    res = dfs(depth + 1)
                    if res is not None:
                        return res
                elif depth + 1 == n:
                    assignments += 1
                    if len(failures) < max_failures:
                        failures.append((G.factors, tuple(images)))
            return None

        res = dfs(0)
        if res == BUDGET_EXCEEDED:
            return SearchResult(BUDGET_EXCEEDED, None, groups_tried, assignments,
                                nodes, tuple(failures))
        if res is not None:
            return SearchResult(FOUND, res, groups_tried, assignments, nodes,
                                tuple(failures))
    return SearchResult(NOT_FOUND, None, groups_tried, assignments, nodes,
                        tuple(failures))
