"""Command-line interface.

Exit codes: 0 success, 2 input is not a Clifford+CS operator (or, for
``validate``, not a normal form), 3 malformed input or flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .errors import CliffCSError, NotInGroup, NotNormalForm, ParseError, UnknownToken
from .gates import GateWord
from .u4 import U4Matrix

EXIT_OK, EXIT_NOT_IN_GROUP, EXIT_USAGE = 0, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def _load_operator(args) -> U4Matrix:
    from . import io

    if args.word is not None:
        return GateWord.parse(args.word).evaluate()
    if args.circuit is not None:
        return GateWord.parse(" ".join(io.read_circuit(args.circuit))).evaluate()
    try:
        m = io.read_matrix(args.input)
    except OSError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(m, U4Matrix):
        raise ParseError("expected a 4×4 matrix")
    return m


def _syllable_line(nf) -> str:
    tail = list(nf.tail) + ([f"W^{nf.phase}"] if nf.phase % 8 else [])
    cliff = f"CLIFF({' '.join(tail) if tail else 'identity'})"
    return " ".join([f"G{j}" for j in nf.syllables] + [cliff])


def cmd_synth(args, out) -> int:
    from .synthesis import synthesize_with_stats

    u = _load_operator(args)
    nf, st = synthesize_with_stats(u)
    if args.format in ("syllables", "both"):
        out.write(_syllable_line(nf) + "\n")
    if args.format in ("gates", "both"):
        out.write(" ".join(nf.gate_tokens()) + "\n")
    print(f"cs-count: {nf.cs_count}", file=sys.stderr)
    print(f"lde: {st.lde}", file=sys.stderr)
    return EXIT_OK


def cmd_so6(args, out) -> int:
    from . import io
    from .so6 import su4_to_so6

    m = su4_to_so6(_load_operator(args), canonical=not args.raw)
    out.write(io.dumps_matrix(m) + "\n")
    return EXIT_OK


def cmd_random(args, out) -> int:
    from . import io
    from .synthesis import random_operator

    if args.cs_count < 0:
        raise UsageError("--cs-count must be non-negative")
    u, nf = random_operator(args.cs_count, args.seed)
    doc = {"format_version": 1, "cs_count": nf.cs_count, "seed": args.seed,
           "word": " ".join(nf.tokens()), "matrix": io.matrix_to_dict(u)}
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_validate(args, out) -> int:
    from .automata import ALPHABET, classify_pattern_language

    letters = args.word.split()
    bad = [x for x in letters if x not in ALPHABET]
    if bad:
        raise UnknownToken(f"unknown symbol(s): {' '.join(bad)}")
    try:
        label = classify_pattern_language(letters)
    except NotNormalForm:
        out.write("reject\n")
        return EXIT_NOT_IN_GROUP
    out.write(f"accept {label}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    from .analysis import count_report

    if args.n < 0:
        raise UsageError("--n must be non-negative")
    r = count_report(args.n)
    out.write(f"n: {r.n}\nexact: {r.exact_count}\ncumulative: {r.cumulative_count}\n")
    return EXIT_OK


def cmd_bound(args, out) -> int:
    from .analysis import epsilon_lower_bound

    w = csv.writer(out, lineterminator="\n")
    w.writerow(["epsilon", "headline_bound", "volume_root", "volume_min_count"])
    for text in args.epsilon.split(","):
        try:
            eps = float(text)
        except ValueError:
            raise UsageError(f"bad epsilon {text!r}") from None
        r = epsilon_lower_bound(eps)
        w.writerow([text.strip(), f"{float(r.headline):.6f}", f"{float(r.volume_root):.6f}", r.volume_integer])
    return EXIT_OK


def cmd_lde(args, out) -> int:
    from .analysis import det_one_phase, in_sandwich, su4_lde
    from .synthesis import random_operator, synthesize

    w = csv.writer(out, lineterminator="\n")
    w.writerow(["cs_count", "seed", "su4_lde", "so6_lde", "in_bounds"])
    skipped = 0
    for n in _int_list(args.counts, "--counts"):
        for s in range(args.seed, args.seed + args.samples):
            u, _ = random_operator(n, s)
            v = det_one_phase(u)
            if v is None:
                skipped += 1
                continue
            k, kp = su4_lde(v), synthesize(v).cs_count
            w.writerow([n, s, k, kp, int(in_sandwich(k, kp))])
    if skipped:
        print(f"skipped {skipped} operator(s) with no determinant-one phase", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    from . import bench

    counts = _int_list(args.counts, "--counts")
    if args.reps < 1:
        raise UsageError("--reps must be positive")
    backends = None if args.backend == "all" else [args.backend]
    try:
        rows = bench.run(counts, args.reps, backends, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(bench.format_rows(rows) + "\n")
    return EXIT_OK


def _int_list(text: str, flag: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers") from None
    if not vals or any(v < 0 for v in vals):
        raise UsageError(f"{flag} expects non-negative integers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliffcs", description="Exact CS-optimal synthesis of two-qubit Clifford+CS operators.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def operator_source(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--input", help="matrix JSON file")
        g.add_argument("--word", help="gate tokens, e.g. 'H1 CS CZ'")
        g.add_argument("--circuit", help="circuit file of gate tokens")

    sp = sub.add_parser("synth", help="synthesize the optimal normal form")
    operator_source(sp)
    sp.add_argument("--format", choices=("syllables", "gates", "both"), default="syllables")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("so6", help="print the SO(6) image as JSON")
    operator_source(sp)
    sp.add_argument("--raw", action="store_true", help="skip sign canonicalization")
    sp.set_defaults(func=cmd_so6)

    sp = sub.add_parser("random", help="random operator of a given CS-count")
    sp.add_argument("--cs-count", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("validate", help="check a symbolic word against the normal-form automaton")
    sp.add_argument("--word", required=True, help="e.g. 'G3 G1 CLIFF'")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("count", help="number of operators of CS-count n")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("bound", help="CS-count lower bound for ε-approximations (CSV)")
    sp.add_argument("--epsilon", required=True, help="one or more comma-separated values")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("lde", help="SU(4) lde against CS-count for random operators (CSV)")
    sp.add_argument("--counts", default="2,10,50")
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_lde)

    sp = sub.add_parser("bench", help="synthesis timing per kernel backend")
    sp.add_argument("--counts", default="10,100,1000,10000")
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--backend", default="all", help="python, cython or all")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInGroup as exc:
        print(f"error: not a Clifford+CS operator: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_GROUP
    except (ParseError, UnknownToken, CliffCSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
