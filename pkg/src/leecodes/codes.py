"""Linear diameter-perfect Lee codes.

Covers the admissibility characterization of the modulus q, the
constructive diameter-4 builder over the canonical double sphere
V = {+-e_i, +-e_i + e_1}, the classical radius-1 sphere construction,
the even-weight transversal, restriction to Z_q^n, and window-based
minimum-distance validation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import product
from math import prod

from sympy import factorint

from .errors import (
    ConstructionError,
    DataFormatError,
    DomainError,
    MembershipError,
    PeriodicityError,
    WindowError,
)
from .groups import FiniteAbelianGroup, lex_rank
from .lee import double_sphere, lee_sphere, lee_weight
from .tiling import (
    Homomorphism,
    KernelBasis,
    apply_hom,
    apply_hom_sparse,
    det_bareiss,
    is_bijection_on,
    kernel_basis,
    kernel_points_in_box,
    period,
)

SPHERE = "sphere"
DOUBLE_SPHERE = "double-sphere"
EVEN_WEIGHT = "even-weight"
IDENTITY = "identity"


@dataclass(frozen=True)
class AnticodeSpec:
    kind: str
    n: int
    r: int
    axis: int = 1

    def __post_init__(self):
        if self.kind not in (SPHERE, DOUBLE_SPHERE):
            raise DomainError(f"unknown anticode kind {self.kind!r}")
        if self.kind == DOUBLE_SPHERE and not 1 <= self.axis <= self.n:
            raise DomainError(f"axis {self.axis} out of range 1..{self.n}")

    def points(self):
        if self.kind == SPHERE:
            return lee_sphere(self.n, self.r)
        return double_sphere(self.n, self.r, self.axis)

    @property
    def diameter(self):
        return 2 * self.r if self.kind == SPHERE else 2 * self.r + 1


@dataclass(frozen=True)
class FactorizationProfile:
    """n = 2^alpha * p_1^a_1 ... p_k^a_k with the odd primes ascending."""

    n: int
    alpha: int
    odd_primes: tuple
    odd_exponents: tuple

    @property
    def radical_odd(self):
        return prod(self.odd_primes)


def factorization_profile(n):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    fac = factorint(n)
    alpha = fac.pop(2, 0)
    primes = tuple(sorted(fac))
    exps = tuple(fac[p] for p in primes)
    assert 2 ** alpha * prod(p ** e for p, e in zip(primes, exps)) == n
    return FactorizationProfile(n=n, alpha=alpha, odd_primes=primes,
                                odd_exponents=exps)


@dataclass(frozen=True)
class LinearLeeCode:
    n: int
    anticode: AnticodeSpec
    hom: Homomorphism
    basis: KernelBasis
    transversal: str
    q: int | None = None
    blocks: tuple | None = field(default=None, compare=False)

    @property
    def axis_vector(self):
        return tuple(1 if i == self.anticode.axis - 1 else 0 for i in range(self.n))


def is_admissible_q(n, q):
    """True iff a linear non-periodic diameter-4 code over Z_q^n exists."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    prof = factorization_profile(n)
    qf = factorint(q)
    beta = qf.pop(2, 0)
    if not 2 <= beta <= prof.alpha + 2:
        return False
    if set(qf) != set(prof.odd_primes):
        return False
    return all(
        1 <= qf[p] <= a for p, a in zip(prof.odd_primes, prof.odd_exponents)
    )


def _squarefree_chain(m):
    """Divisibility chain of squarefree factors multiplying to m.

    Factor j contains prime p iff its exponent in m is at least j.
    """
    fac = factorint(m)
    depth = max(fac.values(), default=0)
    return tuple(
        prod(p for p, e in sorted(fac.items()) if e >= j) for j in range(1, depth + 1)
    )


def construct_dpl4(n, q):
    """Diameter-4 code builder: G = Z_q x H with |H| = 4n/q, squarefree H.

    Images come in blocks of odd first coordinates 2i-1: one block for
    the zero of H, one of length q/4 per order-2 element of H, and one
    of length q/2 per inverse pair keyed by its lexicographically
    smaller member.  The kernel basis rows are emitted explicitly and
    verified to have even Lee weight.
    """
    if not is_admissible_q(n, q):
        raise DomainError(f"q = {q} is not admissible for n = {n}")
    h_order = 4 * n // q
    h_factors = _squarefree_chain(h_order)
    H = FiniteAbelianGroup(h_factors)
    G = FiniteAbelianGroup((q,) + h_factors)
    s = len(G.factors)

    order2 = []
    pair_keys = []
    seen = set()
    for b in H.elements():
        if b == H.identity or b in seen:
            continue
        nb = H.neg(b)
        if nb == b:
            order2.append(b)
        else:
            pair_keys.append(b)  # lex-smaller member comes first in elements()
            seen.add(nb)
        seen.add(b)

    images = []
    blocks = []  # (h_element, 0-based start, length)
    for b, length in [(H.identity, q // 4)] + [(b, q // 4) for b in order2] + [
        (b, q // 2) for b in pair_keys
    ]:
        blocks.append((b, len(images), length))
        for i in range(1, length + 1):
            images.append(((2 * i - 1) % q,) + b)
    if len(images) != n:
        raise ConstructionError(
            f"block sizes sum to {len(images)}, expected {n}"
        )
    hom = Homomorphism(G, tuple(images))

    # m_j: 1-based index with image (1, 0, ..., 1, ..., 0), j-th coordinate 1
    m_index = {}
    for j in range(2, s + 1):
        delta = tuple(1 if jj == j - 2 else 0 for jj in range(len(h_factors)))
        for b, start, _length in blocks:
            if b == delta:
                m_index[j] = start + 1
                break
        else:
            raise ConstructionError(f"no block for unit element of component {j}")

    rows = []
    special = set(m_index.values())
    for i in range(1, n + 1):
        vec = [0] * n
        if i == 1:
            vec[0] = q
        elif i <= q // 4:
            vec[0] = 2 * i - 1
            vec[i - 1] = -1
        elif i in special:
            j = next(j for j, m in m_index.items() if m == i)
            t = G.factors[j - 1]
            vec[0] = t
            vec[i - 1] = -t
        else:
            b = images[i - 1]
            vec[0] = b[0] - sum(b[1:])
            for j in range(2, s + 1):
                vec[m_index[j] - 1] += b[j - 1]
            vec[i - 1] -= 1
        rows.append(tuple(vec))

    identity = G.identity
    for row in rows:
        sparse = [(idx, x) for idx, x in enumerate(row) if x]
        if apply_hom_sparse(hom, sparse) != identity:
            raise ConstructionError(f"basis row {row} not in kernel")
        if lee_weight(row) % 2 != 0:
            raise ConstructionError(f"basis row {row} has odd Lee weight")
    # |det| = q * t_2 * ... * t_s = 4n: lower triangular after moving the
    # columns m_j next to column 1 (diagonal q, -t_j, -1, ..., -1).
    basis = KernelBasis(rows=tuple(rows), det_abs=4 * n)

    anticode = AnticodeSpec(kind=DOUBLE_SPHERE, n=n, r=1, axis=1)
    return LinearLeeCode(n=n, anticode=anticode, hom=hom, basis=basis,
                         transversal=EVEN_WEIGHT, blocks=tuple(blocks))


def construct_pl1(n):
    """Classical radius-1 construction: G = Z_{2n+1}, phi(e_i) = i."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    G = FiniteAbelianGroup((2 * n + 1,))
    hom = Homomorphism(G, tuple((i,) for i in range(1, n + 1)))
    anticode = AnticodeSpec(kind=SPHERE, n=n, r=1)
    return LinearLeeCode(n=n, anticode=anticode, hom=hom,
                         basis=kernel_basis(hom), transversal=IDENTITY)


def codeword_of_tile(code, l):
    """Codeword of the tile translated by kernel vector l.

    Even-weight transversal: the even-Lee-weight member of the center
    pair {l, l + e_axis}; identity transversal: l itself.
    """
    if apply_hom(code.hom, l) != code.hom.group.identity:
        raise MembershipError(f"{l} is not in the kernel lattice")
    if code.transversal == IDENTITY:
        return tuple(l)
    if lee_weight(l) % 2 == 0:
        return tuple(l)
    return tuple(a + b for a, b in zip(l, code.axis_vector))


def restrict_to_zq(code, q):
    """Restriction to Z_q^n; requires the code period to divide q."""
    p = period(code.hom)
    if q % p != 0:
        raise PeriodicityError(f"period {p} does not divide q = {q}")
    return replace(code, q=q)


def codewords_mod_q(code):
    """All codewords of a modular code, as reduced words, sorted."""
    if code.q is None:
        raise DomainError("code has no modulus; restrict it first")
    q = code.q
    identity = code.hom.group.identity
    out = []
    for x in product(range(q), repeat=code.n):
        if apply_hom(code.hom, x) != identity:
            continue
        if code.transversal == EVEN_WEIGHT and lee_weight(x, q) % 2 != 0:
            x = tuple((a + b) % q for a, b in zip(x, code.axis_vector))
        out.append(tuple(x))
    return sorted(out)


def codewords_in_window(code, R):
    """All codewords inside [-R,R]^n, sorted lexicographically."""
    out = []
    for l in kernel_points_in_box(code.hom, R + 1):
        c = codeword_of_tile(code, l)
        if all(-R <= x <= R for x in c):
            out.append(c)
    return sorted(set(out))


def _is_lattice_code(code):
    """True when the codeword set equals the kernel lattice."""
    if code.transversal == IDENTITY:
        return True
    return all(lee_weight(row) % 2 == 0 for row in code.basis.rows)


def min_distance_window(code, R):
    """Minimum pairwise Lee distance among codewords inside [-R,R]^n."""
    if R < 1:
        raise DomainError(f"window radius must be >= 1, got {R}")
    cws = codewords_in_window(code, R)
    if len(cws) < 2:
        raise WindowError(f"fewer than 2 codewords inside [-{R},{R}]^n")
    if _is_lattice_code(code):
        # codeword set is a lattice containing O: the minimum pairwise
        # distance is realized against the origin
        return min(lee_weight(c) for c in cws if any(c))
    best = None
    cws.sort()
    for i, u in enumerate(cws):
        for v in cws[i + 1:]:
            d0 = v[0] - u[0]
            if best is not None and d0 >= best:
                break
            d = d0
            for a, b in zip(u[1:], v[1:]):
                d += abs(a - b)
                if best is not None and d >= best:
                    break
            if best is None or d < best:
                best = d
    return best


# --- canonical JSON descriptor -------------------------------------------

def code_to_dict(code):
    d = {
        "n": code.n,
        "anticode": {
            "kind": code.anticode.kind,
            "r": code.anticode.r,
            "axis": code.anticode.axis,
        },
        "group": list(code.hom.group.factors),
        "images": [list(g) for g in code.hom.images],
        "transversal": code.transversal,
    }
    if code.q is not None:
        d["q"] = code.q
    d["basis"] = [list(row) for row in code.basis.rows]
    return d


def code_to_json(code):
    return json.dumps(code_to_dict(code), separators=(",", ":"))


def code_from_dict(d):
    try:
        n = int(d["n"])
        ac = d["anticode"]
        anticode = AnticodeSpec(kind=ac["kind"], n=n, r=int(ac["r"]),
                                axis=int(ac.get("axis", 1)))
        G = FiniteAbelianGroup(tuple(d["group"]))
        hom = Homomorphism(G, tuple(tuple(g) for g in d["images"]))
        transversal = d["transversal"]
        q = d.get("q")
        rows = tuple(tuple(int(x) for x in row) for row in d["basis"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DataFormatError(f"malformed code descriptor: {exc}") from exc
    if transversal not in (EVEN_WEIGHT, IDENTITY):
        raise DataFormatError(f"unknown transversal {transversal!r}")
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DataFormatError("basis is not an n x n matrix")
    identity = G.identity
    for row in rows:
        if apply_hom(hom, row) != identity:
            raise DataFormatError(f"basis row {row} not in kernel")
    det = abs(det_bareiss(rows))
    if det != G.order:
        raise DataFormatError(f"|det(basis)| = {det} != |G| = {G.order}")
    if not is_bijection_on(hom, anticode.points()):
        raise DataFormatError("homomorphism is not bijective on the anticode")
    return LinearLeeCode(n=n, anticode=anticode, hom=hom,
                         basis=KernelBasis(rows=rows, det_abs=det),
                         transversal=transversal,
                         q=int(q) if q is not None else None)


def code_from_json(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"invalid JSON: {exc}") from exc
    return code_from_dict(d)
