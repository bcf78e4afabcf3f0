"""Command-line front-end with stable machine-readable output.

Exit codes: 0 success/verified, 1 verified negative (NotFound,
inadmissible, verification failed), 2 budget exceeded, 64 usage error,
65 data-format error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import codes, decoder, groups, lee, nonregular, tiling
from .errors import DataFormatError, LeeCodeError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATA = 65


def _emit(args, human, payload=None):
    if getattr(args, "json", False) and payload is not None:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(human)


def _load_code(path):
    try:
        with open(path) as fh:
            return codes.code_from_json(fh.read())
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from exc


def _write_out(path, text):
    with open(path, "w") as fh:
        fh.write(text + "\n")


def cmd_construct(args):
    try:
        code = codes.construct_dpl4(args.n, args.q)
    except LeeCodeError as exc:
        _emit(args, f"inadmissible: {exc}", {"error": str(exc)})
        return EXIT_NEGATIVE
    payload = codes.code_to_dict(code)
    if args.out:
        _write_out(args.out, codes.code_to_json(code))
    _emit(args, f"constructed DPL({args.n},4) code, group {list(code.hom.group.factors)}",
          payload)
    return EXIT_OK


def cmd_pl1(args):
    code = codes.construct_pl1(args.n)
    if args.out:
        _write_out(args.out, codes.code_to_json(code))
    _emit(args, f"constructed PL({args.n},1) code, group {list(code.hom.group.factors)}",
          codes.code_to_dict(code))
    return EXIT_OK


def cmd_admissible(args):
    ok = codes.is_admissible_q(args.n, args.q)
    _emit(args, "admissible" if ok else "inadmissible",
          {"n": args.n, "q": args.q, "admissible": ok})
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_search(args):
    with open(args.anticode) as fh:
        V = lee.parse_words(fh.read())
    result = tiling.search_lattice_tiling(V, budget=int(float(args.budget)))
    cert = result.certificate()
    if result.status == tiling.FOUND:
        _emit(args, f"Found: group {cert['group']} images {cert['images']}", cert)
        return EXIT_OK
    if result.status == tiling.NOT_FOUND:
        _emit(args, f"NotFound: groups_tried={result.groups_tried} "
                    f"assignments_tried={result.assignments_tried}", cert)
        return EXIT_NEGATIVE
    _emit(args, f"BudgetExceeded: nodes={result.nodes}", cert)
    return EXIT_BUDGET


def cmd_groups(args):
    gs = groups.enumerate_abelian_groups(args.order)
    payload = [list(G.factors) for G in gs]
    _emit(args, "\n".join(str(list(G.factors)) for G in gs), payload)
    return EXIT_OK


def cmd_verify(args):
    code = _load_code(args.code)
    V = code.anticode.points()
    bij = tiling.is_bijection_on(code.hom, V)
    cover = bij and tiling.verify_window_tiling(code.hom, V, args.window)
    d = code.anticode.diameter + 1
    mind = codes.min_distance_window(code, args.window) if cover else None
    ok = cover and mind is not None and mind >= d
    _emit(args,
          f"bijection={bij} window_cover={cover} min_distance={mind} "
          f"required>={d} -> {'verified' if ok else 'FAILED'}",
          {"bijection": bij, "window_cover": cover, "min_distance": mind,
           "required": d, "verified": ok})
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_decode(args):
    code = _load_code(args.code)
    word = lee.parse_word(args.word)
    table = decoder.build_decoder_table(code)
    if args.mod is not None:
        cw = decoder.decode_modular(table, word, args.mod)
        _emit(args, lee.format_word(cw), {"codeword": list(cw), "q": args.mod})
    else:
        res = decoder.decode(table, word)
        _emit(args, lee.format_word(res.codeword),
              {"codeword": list(res.codeword),
               "tile_vector": list(res.tile_vector)})
    return EXIT_OK


def cmd_nonregular(args):
    if args.n != 3:
        print("only n=3 is supported", file=sys.stderr)
        return EXIT_USAGE
    t = nonregular.shifted_tiling_n3(args.bits, args.window)
    if args.out:
        _write_out(args.out, t.to_json())
    _emit(args, f"shifted tiling bits={args.bits} R={args.window} "
                f"centers={len(t.centers)}", t.to_dict())
    return EXIT_OK


def cmd_tile(args):
    code = _load_code(args.code)
    pts = tiling.kernel_points_in_box(code.hom, args.window)
    payload = {"window": args.window, "centers": [list(p) for p in pts]}
    _emit(args, lee.format_words(pts), payload)
    return EXIT_OK


def cmd_bench_decode(args):
    ns = [int(tok) for tok in args.n_list.split(",")]
    rng = random.Random(0)
    rows = []
    for n in ns:
        prof = codes.factorization_profile(n)
        q = 4 * prof.radical_odd
        code = codes.construct_dpl4(n, q)
        table = decoder.build_decoder_table(code)
        words = [tuple(rng.randrange(-1000, 1000) for _ in range(n))
                 for _ in range(args.reps)]
        t0 = time.perf_counter_ns()
        for w in words:
            decoder.decode(table, w)
        t1 = time.perf_counter_ns()
        rows.append((n, (t1 - t0) // args.reps))
    out = "\n".join(f"{n},{mean_ns}" for n, mean_ns in rows)
    print(out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="leecodes",
                                description="diameter-perfect Lee codes")
    sub = p.add_subparsers(dest="command")

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true",
                        help="emit the canonical JSON payload")
        return sp

    sp = add("construct", cmd_construct, help="build a DPL(n,4,q) code")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--out")

    sp = add("pl1", cmd_pl1, help="build the classical PL(n,1) code")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")

    sp = add("admissible", cmd_admissible, help="test modulus admissibility")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = add("search", cmd_search, help="search for a lattice tiling by a tile file")
    sp.add_argument("--anticode", required=True)
    sp.add_argument("--budget", default=str(tiling.DEFAULT_BUDGET))

    sp = add("groups", cmd_groups, help="enumerate Abelian groups of an order")
    sp.add_argument("--order", type=int, required=True)

    sp = add("verify", cmd_verify, help="verify a code file on a window")
    sp.add_argument("--code", required=True)
    sp.add_argument("--window", type=int, required=True)

    sp = add("decode", cmd_decode, help="decode a word with a code file")
    sp.add_argument("--code", required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--mod", type=int)

    sp = add("nonregular", cmd_nonregular, help="n=3 shifted window tiling")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--bits", required=True)
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--out")

    sp = add("tile", cmd_tile, help="kernel tile centers of a code in a window")
    sp.add_argument("--code", required=True)
    sp.add_argument("--window", type=int, required=True)

    sp = add("bench-decode", cmd_bench_decode, help="decode timing per dimension")
    sp.add_argument("--n-list", required=True)
    sp.add_argument("--reps", type=int, default=100)

    return p


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if not getattr(args, "fn", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except DataFormatError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except LeeCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main():
    sys.exit(run(sys.argv[1:]))
