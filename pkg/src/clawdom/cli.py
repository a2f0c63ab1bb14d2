"""Command line: ``clawdom solve|oracle|verify|gen|bench``.

Exit codes: 0 success, 2 input outside the class, 3 unreadable input,
4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from clawdom.bench import ORACLE_CUTOFF, format_report, run_bench
from clawdom.driver import solve, verify_membership
from clawdom.errors import ClassViolation, LiftError, StructureViolation
from clawdom.exact import mds_bounded, mds_exact
from clawdom.generators import FAMILIES, GenerationError, gen_family
from clawdom.io import FORMATS, ParseError, emit_graph, emit_solution, parse_graph, sniff_format

EXIT_OK = 0
EXIT_CLASS = 2
EXIT_PARSE = 3
EXIT_INTERNAL = 4


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _name_list(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    for name in names:
        if name not in FAMILIES:
            raise argparse.ArgumentTypeError(f"unknown family {name!r}")
    return names


def _read(path: str, fmt: str | None):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_graph(data, fmt or sniff_format(data))


def _write(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _json(obj) -> bytes:
    return (json.dumps(obj) + "\n").encode("utf-8")


def cmd_solve(args) -> int:
    g = _read(args.file, args.format)
    sol = solve(g, fallback_exact=args.fallback_exact, small_cutoff=args.small_cutoff)
    _write(emit_solution(sol), None)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read(args.file, args.format)
    if args.cap is None:
        found = mds_exact(g)
    else:
        found = mds_bounded(g, args.cap)
    out = {"n": g.n, "cap": args.cap, "found": found is not None,
           "gamma": len(found) if found is not None else None,
           "dominating_set": sorted(found) if found is not None else None}
    _write(_json(out), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read(args.file, args.format)
    rep = verify_membership(g)
    _write(_json({"n": g.n, "member": rep.member, **rep.as_dict()}), None)
    return EXIT_OK if rep.member else EXIT_CLASS


def cmd_gen(args) -> int:
    g, manifest = gen_family(args.family, n=args.n, q=args.q, seed=args.seed)
    _write(emit_graph(g, args.format), args.out)
    if args.manifest:
        Path(args.manifest).write_bytes(_json(manifest.as_dict()))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(args.sizes, range(args.seed, args.seed + args.seeds), args.families,
                     oracle_cutoff=args.oracle_cutoff, workers=args.workers)
    _write(format_report(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clawdom",
                                description="Minimum dominating sets of (claw, P8)-free graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log warnings and debug output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(sp):
        sp.add_argument("file", help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (default: guessed from the first line)")

    sp = sub.add_parser("solve", help="certified minimum dominating set")
    with_file(sp)
    sp.add_argument("--fallback-exact", action="store_true",
                    help="solve non-members by exhaustive search instead of failing")
    sp.add_argument("--small-cutoff", type=int, default=12,
                    help="kernels with at most this many vertices go to exact search")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="exhaustive minimum dominating set")
    with_file(sp)
    sp.add_argument("--cap", type=int, default=None, help="only look for sets of at most this size")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check claw-freeness and P8-freeness")
    with_file(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate an instance")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out", default=None)
    sp.add_argument("--format", choices=FORMATS, default="edgelist")
    sp.add_argument("--manifest", default=None, help="also write the instance manifest here")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time solve against the oracle")
    sp.add_argument("--families", type=_name_list, default=["line_graph"])
    sp.add_argument("--sizes", type=_int_list, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    sp.add_argument("--oracle-cutoff", type=int, default=ORACLE_CUTOFF)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ClassViolation as exc:
        print(f"class violation: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (StructureViolation, LiftError, AssertionError, GenerationError) as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
