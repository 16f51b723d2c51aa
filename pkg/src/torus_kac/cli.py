"""Command-line front end.

Exit codes: 0 on success, 1 when an oracle disagrees with the prediction,
2 on invalid input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bruhat import format_perm, parse_perm_tuple
from .errors import TorusKacError
from .exactmath import IntPoly, poly_eval
from .graph import ColoredMultigraph, tutte
from .kacsum import kac_polynomial, kac_report, rw_polynomial
from .orbits import (
    DEFAULT_CELL_BUDGET,
    DEFAULT_FLAG_BUDGET,
    gm_orbit_count,
    oracle_cell_count,
    oracle_flag_orbits,
)
from .quiver import build_supernova, classify_root, delta, parse_multipartition
from .symfunc import genfun_lines, genfun_series

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


def _threads(args) -> int:
    env = os.environ.get("TORUS_KAC_THREADS")
    n = int(env) if env else args.threads
    if n < 1:
        raise argparse.ArgumentTypeError("thread count must be positive")
    return n


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_kac(args) -> int:
    mu = parse_multipartition(args.input)
    report = kac_report(mu, threads=_threads(args))
    poly = IntPoly(report["kac"])
    if args.format == "text" and report["warning_outside_M"]:
        print(f"warning: v_mu for {mu} lies outside the fundamental domain", file=sys.stderr)
    _emit(args, str(poly), report)
    return EXIT_OK


def cmd_cells(args) -> int:
    mu = parse_multipartition(args.input)
    _, cells = kac_polynomial(mu, threads=_threads(args), include_all=args.all)
    lines = [",".join(format_perm(w) for w in c.tuple) + f": {c.rw}" for c in cells]
    _emit(args, "\n".join(lines), {"mu": mu.as_lists(), "r": mu.r, "cells": [c.to_dict() for c in cells]})
    return EXIT_OK


def cmd_genfun(args) -> int:
    series = genfun_series(args.r, args.k)
    payload = {
        "r": args.r,
        "k": args.k,
        "series": [
            {
                "s": s,
                "terms": [
                    {"m": [list(lam) for lam in key], "coeffs": list(c.assert_polynomial().coeffs)}
                    for key, c in sorted(series.terms[s].coeffs.items())
                ],
            }
            for s in range(1, args.r + 1)
        ],
    }
    _emit(args, "\n".join(genfun_lines(args.r, args.k)), payload)
    return EXIT_OK


def cmd_rw(args) -> int:
    wt = parse_perm_tuple(args.input)
    rw = rw_polynomial(wt)
    _emit(args, str(rw), {"w": [format_perm(w) for w in wt], "rw": list(rw.coeffs)})
    return EXIT_OK


def cmd_tutte(args) -> int:
    g = ColoredMultigraph.from_json(Path(args.graph).read_text())
    t = tutte(g)
    terms = [[i, j, c] for (i, j), c in sorted(t.terms.items())]
    _emit(args, str(t), {"tutte": terms})
    return EXIT_OK


def cmd_gm(args) -> int:
    poly = gm_orbit_count(args.r)
    _emit(args, str(poly), {"r": args.r, "gm": list(poly.coeffs)})
    return EXIT_OK


def cmd_oracle_rw(args) -> int:
    wt = parse_perm_tuple(args.input)
    r = len(wt[0])
    count = oracle_cell_count(wt, args.p, budget=args.budget or DEFAULT_CELL_BUDGET)
    predicted = (args.p - 1) ** (r - 1) * poly_eval(rw_polynomial(wt), args.p)
    _emit(args, f"{count} {predicted}", {"count": count, "predicted": predicted, "p": args.p})
    return EXIT_OK if count == predicted else EXIT_MISMATCH


def cmd_oracle_flags(args) -> int:
    mu = parse_multipartition(args.input)
    count = oracle_flag_orbits(mu, args.p, budget=args.budget or DEFAULT_FLAG_BUDGET)
    poly, _ = kac_polynomial(mu, threads=_threads(args))
    predicted = poly_eval(poly, args.p)
    _emit(args, f"{count} {predicted}", {"count": count, "predicted": predicted, "p": args.p})
    return EXIT_OK if count == predicted else EXIT_MISMATCH


def cmd_classify_root(args) -> int:
    mu = parse_multipartition(args.input)
    qv, v = build_supernova(mu)
    cls = classify_root(qv, v)
    d = delta(qv, v)
    witness = [list(u) for u in cls.witness]
    _emit(args, f"{cls.tag.value} delta={d}", {"tag": cls.tag.value, "delta": d, "witness": witness})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torus-kac", description="Kac polynomials of supernova quivers.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--threads", type=int, default=1, help="worker processes (TORUS_KAC_THREADS overrides)")
    common.add_argument("--budget", type=int, default=None, help="enumeration cap for the oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("kac", cmd_kac, "Kac polynomial via the cell sum").add_argument("--input", required=True, help='e.g. "r=5; mu=2"')
    p = add("cells", cmd_cells, "per-cell external activity polynomials")
    p.add_argument("--input", required=True)
    p.add_argument("--all", action="store_true", help="include disconnected cells")
    p = add("genfun", cmd_genfun, "generating-function coefficients A_1..A_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    add("rw", cmd_rw, "R_w(q) of a permutation tuple").add_argument("--input", required=True, help='e.g. "132,312"')
    add("tutte", cmd_tutte, "Tutte polynomial of a graph JSON file").add_argument("--graph", required=True)
    add("gm", cmd_gm, "Gel'fand-MacPherson orbit count for Gr(2, r)").add_argument("--r", type=int, required=True)
    p = add("oracle-rw", cmd_oracle_rw, "finite-field count for one cell")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    p = add("oracle-flags", cmd_oracle_flags, "torus orbits on flag varieties over F_p")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    add("classify-root", cmd_classify_root, "root type of v_mu").add_argument("--input", required=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (TorusKacError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
