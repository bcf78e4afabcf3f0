"""Lee-metric primitives.

Words are plain tuples of Python integers, so there is no silent
wraparound at any scale.  All enumerations are emitted in lexicographic
order by coordinates, which keeps golden files stable.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .errors import DimensionError, DomainError


def lee_weight(w, q=None):
    """Lee weight of a word: distance to the origin (optionally mod q)."""
    if q is None:
        return sum(abs(x) for x in w)
    if q < 2:
        raise DomainError(f"modulus must be >= 2, got {q}")
    total = 0
    for x in w:
        d = x % q
        total += min(d, q - d)
    return total


def lee_distance(u, v, q=None):
    """Lee distance between two words of equal length (optionally mod q)."""
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return lee_weight(tuple(a - b for a, b in zip(u, v)), q)


def _positive_parts(k, total):
    """Tuples of k positive integers with sum <= total."""
    if k == 0:
        yield ()
        return
    for first in range(1, total - k + 2):
        for rest in _positive_parts(k - 1, total - first):
            yield (first,) + rest


def lee_sphere(n, r):
    """All words of Z^n within Lee distance r of the origin, lexicographic.

    Enumerated by support (nonzero positions, magnitudes, signs), so the
    cost is proportional to the sphere volume even when n is large.
    """
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    out = []
    for k in range(min(n, r) + 1):
        for positions in combinations(range(n), k):
            for mags in _positive_parts(k, r):
                for signs in product((1, -1), repeat=k):
                    w = [0] * n
                    for pos, mag, sign in zip(positions, mags, signs):
                        w[pos] = sign * mag
                    out.append(tuple(w))
    return sorted(out)


def double_sphere(n, r, axis=1):
    """The double sphere S(O) | S(e_axis), sorted lexicographically.

    axis is 1-based; the canonical copy has axis 1.
    """
    if not 1 <= axis <= n:
        raise DomainError(f"axis {axis} out of range 1..{n}")
    e = tuple(1 if i == axis - 1 else 0 for i in range(n))
    pts = set(lee_sphere(n, r))
    pts.update(tuple(a + b for a, b in zip(w, e)) for w in lee_sphere(n, r))
    return sorted(pts)


def double_sphere_size(n, r):
    """Closed-form volume of the double sphere, exact integer arithmetic."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    return sum(
        2 ** (i + 1) * comb(n - 1, i) * comb(r + 1, i + 1)
        for i in range(min(n - 1, r) + 1)
    )


# --- serialization: words as comma-separated ints, sets as sorted lines ---

def format_word(w):
    return ",".join(str(x) for x in w)


def parse_word(s):
    try:
        return tuple(int(tok) for tok in s.strip().split(","))
    except ValueError as exc:
        raise DomainError(f"bad word {s!r}") from exc


def format_words(words):
    return "\n".join(format_word(w) for w in sorted(words))


def parse_words(text):
    words = [parse_word(line) for line in text.splitlines() if line.strip()]
    if words and any(len(w) != len(words[0]) for w in words):
        raise DimensionError("words of mixed length")
    return words
