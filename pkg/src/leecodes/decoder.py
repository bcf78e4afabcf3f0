"""Table-driven decoding for linear perfect Lee codes.

The table stores the inverse of the homomorphism's restriction to the
anticode, indexed by lexicographic element rank.  Decoding a word costs
n multiply-accumulates per group component plus one rank computation
and one table read; the table is built once and never rebuilt on the
decode path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import codeword_of_tile
from .errors import ConstructionError, DimensionError, PeriodicityError
from .groups import lex_rank
from .lee import format_word
from .tiling import period


@dataclass(frozen=True)
class DecoderTable:
    code: "LinearLeeCode"
    entries: tuple  # slot lex_rank(g) - 1 holds f(g) in the anticode
    _columns: tuple  # per group component: (modulus, image column)

    def dump(self):
        """Rank-indexed audit listing, one `rank: word` line per slot."""
        return "\n".join(
            f"{rank}: {format_word(w)}" for rank, w in enumerate(self.entries, 1)
        )


def build_decoder_table(code):
    """Invert the restriction of phi to the anticode, one pass."""
    hom = code.hom
    G = hom.group
    columns = _columns_of(hom)
    entries = [None] * G.order
    for w in code.anticode.points():
        g = _phi_columns(G.factors, columns, w)
        idx = lex_rank(g, G) - 1
        if entries[idx] is not None:
            raise ConstructionError(
                f"phi collides on anticode: {entries[idx]} and {w} both map to {g}"
            )
        entries[idx] = tuple(w)
    if any(e is None for e in entries):
        raise ConstructionError("phi is not onto G on the anticode")
    return DecoderTable(code=code, entries=tuple(entries), _columns=columns)


def _columns_of(hom):
    factors = hom.group.factors
    return tuple(
        (t, tuple(g[j] for g in hom.images)) for j, t in enumerate(factors)
    )


def _phi_columns(factors, columns, a):
    # coordinates reduced per component before the multiply-accumulate,
    # keeping every intermediate bounded by t^2 * n
    return tuple(
        sum((ai % t) * gi for ai, gi in zip(a, col)) % t for t, col in columns
    )


@dataclass(frozen=True)
class DecodeResult:
    codeword: tuple
    tile_vector: tuple


def decode(table, a):
    """Decode a word of Z^n to its codeword and tile translation vector."""
    code = table.code
    if len(a) != code.n:
        raise DimensionError(f"word length {len(a)} != {code.n}")
    G = code.hom.group
    g = _phi_columns(G.factors, table._columns, a)
    w = table.entries[lex_rank(g, G) - 1]
    l = tuple(ai - wi for ai, wi in zip(a, w))
    # kernel membership is part of the decode contract
    if _phi_columns(G.factors, table._columns, l) != G.identity:
        raise ConstructionError(f"tile vector {l} escaped the kernel")
    return DecodeResult(codeword=codeword_of_tile(code, l), tile_vector=l)


def decode_modular(table, a, q):
    """Decode in Z_q^n: decode any lift, then reduce the codeword mod q."""
    p = period(table.code.hom)
    if q % p != 0:
        raise PeriodicityError(f"period {p} does not divide q = {q}")
    res = decode(table, tuple(a))
    return tuple(x % q for x in res.codeword)
