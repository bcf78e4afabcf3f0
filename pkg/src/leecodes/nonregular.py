"""Non-regular double-cross tilings on the half-integer lattice.

Points of the lattice generated by (1/2)e_1, e_2, ..., e_n are stored
exactly with a doubled first coordinate; no floating point anywhere.
The n=3 family shifts diagonal connectivity components of the tiling
per a finite bit string, yielding pairwise-distinct integer-centered
window tilings and, through the even-weight transversal, non-lattice
diameter-4 codes on the window.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError, StructuralError, WindowError
from .groups import FiniteAbelianGroup, element_order
from .lee import double_sphere, lee_weight
from .tiling import Homomorphism, apply_hom_half

K1 = "K1"
K2 = "K2"


@dataclass(frozen=True)
class HalfWord:
    """Point of the half lattice: first coordinate doubled_first / 2."""

    doubled_first: int
    rest: tuple

    def __post_init__(self):
        object.__setattr__(self, "rest", tuple(self.rest))

    @property
    def doubled(self):
        """The point as an all-integer tuple (2*x_1, x_2, ..., x_n)."""
        return (self.doubled_first,) + self.rest


def _split_power_of_two(n):
    t = 0
    m = n
    while m % 2 == 0:
        t += 1
        m //= 2
    return t, (m - 1) // 2  # n = 2^t * (2k+1)


def double_cross_support(n):
    """The 8n half-lattice points of W = V | (V + (1/2)e_1), doubled form."""
    out = []
    for v in double_sphere(n, 1, 1):
        out.append((2 * v[0],) + tuple(v[1:]))
        out.append((2 * v[0] + 1,) + tuple(v[1:]))
    return sorted(out)


def construct_double_cross_hom(n):
    """The Z_{8n} homomorphism bijective on the 8n-point double-cross W.

    Requires n >= 2 and n not a power of 2 (write n = 2^t(2k+1), k > 0).
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    t, k = _split_power_of_two(n)
    if k == 0:
        raise DomainError(f"n = {n} is a power of 2; no such tiling is known")
    mod = 8 * n
    G = FiniteAbelianGroup((mod,))
    odd = 2 * k + 1
    images = [None] * n
    images[0] = ((2 * odd) % mod,)
    for i in range(2, 2 ** t + 1):
        images[i - 1] = (((4 * i - 2) * odd) % mod,)
    for j in range(1, k + 1):
        c = 2 ** t + (j - 1) * 2 ** (t + 1)
        for i in range(1, 2 ** (t + 1) + 1):
            images[i + c - 1] = ((j + 4 * (i - 1) * odd) % mod,)
    assert all(g is not None for g in images)
    return Homomorphism(G, tuple(images), half_image=(odd % mod,))


def verify_nonregular(hom, n):
    """Both sufficient-condition checks for a non-regular tiling.

    True iff phi is bijective on the 8n-point W and some phi(e_i),
    i >= 2, generates the order-8n group.
    """
    if hom.half_image is None:
        raise StructuralError("homomorphism has no half image")
    G = hom.group
    W = double_cross_support(n)
    images = {apply_hom_half(hom, hw) for hw in W}
    if len(images) != len(W) or len(W) != G.order:
        return False
    return any(element_order(g, G) == G.order for g in hom.images[1:])


@dataclass(frozen=True)
class HalfKernelBasis:
    rows: tuple  # HalfWord rows
    det_abs: int


def half_kernel_basis():
    """Kernel basis of the n=3 double-cross homomorphism inside M.

    Rows: -(1/2)e_1 + 3e_2, 24e_2, 13e_2 - e_3; |det| = 12 in cube
    volume (exact 3x3 determinant in doubled-first coordinates, halved).
    """
    hom = construct_double_cross_hom(3)
    rows = (
        HalfWord(-1, (3, 0)),
        HalfWord(0, (24, 0)),
        HalfWord(0, (13, -1)),
    )
    identity = hom.group.identity
    for hw in rows:
        if apply_hom_half(hom, hw.doubled) != identity:
            raise StructuralError(f"{hw} is not in the kernel")
    doubled = [list(hw.doubled) for hw in rows]
    det2 = (
        doubled[0][0] * (doubled[1][1] * doubled[2][2] - doubled[1][2] * doubled[2][1])
        - doubled[0][1] * (doubled[1][0] * doubled[2][2] - doubled[1][2] * doubled[2][0])
        + doubled[0][2] * (doubled[1][0] * doubled[2][1] - doubled[1][1] * doubled[2][0])
    )
    assert det2 % 2 == 0
    return HalfKernelBasis(rows=rows, det_abs=abs(det2) // 2)


def component_index_n3(center):
    """Classify a tile center of the n=3 tiling into K1 or a K2 component.

    The rule only consults x_2 + x_3 (the regions are prisms along the
    first axis): K1 iff (x_2 + x_3) mod 6 in {0, 1, 5}, otherwise K2
    with component index floor((x_2 + x_3 - 2) / 6).
    """
    s = center[1] + center[2]
    if s % 6 in (0, 1, 5):
        return (K1, None)
    return (K2, (s - 2) // 6)


@dataclass(frozen=True)
class ShiftedWindowTiling:
    R: int
    bits: str
    centers: tuple  # integer 3-tuples, sorted lexicographically

    def to_dict(self):
        return {"R": self.R, "bits": self.bits,
                "centers": [list(c) for c in self.centers]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


def shifted_tiling_n3(bits, R):
    """Shift the K2 components of the n=3 lattice tiling per a bit string.

    Component m is shifted by +(1/2)e_1 when 1 <= m <= len(bits) and
    bits[m-1] == '1', by -(1/2)e_1 otherwise (the m <= 0 default).  All
    resulting centers are integral; returned centers are those whose
    tile can touch [-R,R]^3.
    """
    if any(b not in "01" for b in bits):
        raise DomainError(f"bits must be a 0/1 string, got {bits!r}")
    if R < 6 * len(bits) + 6:
        raise WindowError(
            f"window R = {R} too small for {len(bits)} components; need >= "
            f"{6 * len(bits) + 6}"
        )
    hom = construct_double_cross_hom(3)
    mod = hom.group.order  # 24
    half = hom.half_image[0]  # 3
    g2 = hom.images[1][0]  # 1
    g3 = hom.images[2][0]  # 13
    g3_inv = pow(g3, -1, mod)
    margin = 4
    lim = R + 2
    centers = []
    for d1 in range(-2 * (R + margin), 2 * (R + margin) + 1):
        base = (d1 * half) % mod
        for x2 in range(-(R + margin), R + margin + 1):
            # solve base + x2*g2 + x3*g3 = 0 (mod 24) for x3
            x3_0 = (-(base + x2 * g2) * g3_inv) % mod
            start = -(R + margin)
            x3 = start + ((x3_0 - start) % mod)
            while x3 <= R + margin:
                kind, m = component_index_n3((0, x2, x3))
                if kind == K1:
                    shifted = d1
                else:
                    up = 1 <= m <= len(bits) and bits[m - 1] == "1"
                    shifted = d1 + 1 if up else d1 - 1
                if shifted % 2 != 0:
                    raise StructuralError(
                        f"shifted center ({shifted}/2,{x2},{x3}) is not integral"
                    )
                c = (shifted // 2, x2, x3)
                if all(-lim <= x <= lim for x in c):
                    centers.append(c)
                x3 += mod
    return ShiftedWindowTiling(R=R, bits=bits, centers=tuple(sorted(set(centers))))


def verify_cover(tiling):
    """Exact-cover oracle: each window point in exactly one translate."""
    R = tiling.R
    tile = double_sphere(3, 1, 1)
    counts = {}
    for c in tiling.centers:
        for v in tile:
            p = (c[0] + v[0], c[1] + v[1], c[2] + v[2])
            if all(-R <= x <= R for x in p):
                counts[p] = counts.get(p, 0) + 1
    if len(counts) != (2 * R + 1) ** 3:
        return False
    return all(v == 1 for v in counts.values())


def code_from_window_tiling(tiling):
    """One codeword per tile: the even-Lee-weight member of {c, c + e_1}."""
    out = []
    for c in tiling.centers:
        if lee_weight(c) % 2 == 0:
            out.append(c)
        else:
            out.append((c[0] + 1, c[1], c[2]))
    return sorted(set(out))
