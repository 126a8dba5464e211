"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad input (or an
unbounded language given to ``decompose``), 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import automata, complexity, verifier
from .automata import CapExceeded
from .langspec import BUILTINS, as_nfa, builtin, load_source, source_label

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _source(args):
    if bool(args.builtin) == bool(args.input):
        raise InputError("give exactly one of --builtin NAME or --input FILE")
    if args.builtin:
        return builtin(args.builtin)
    return load_source(args.input)


def _check_lengths(args):
    if args.max_length < 0:
        raise InputError("--max-length must be non-negative")
    if args.horizon is not None and args.horizon < args.max_length:
        raise InputError("--horizon must be at least --max-length")


def cmd_profile(args, out):
    _check_lengths(args)
    src = _source(args)
    prof = complexity.profile(src, args.max_length, args.horizon)
    rows = prof.rows()
    if args.format == "json":
        out.write(json.dumps({"source": source_label(src),
                              "rows": [{"n": n, "p": p, "s": s, "exact": e} for n, p, s, e in rows]}) + "\n")
    elif args.format == "table":
        out.write(f"{'n':>4} {'p':>8} {'s':>8}  exact\n")
        for n, p, s, e in rows:
            out.write(f"{n:>4} {p:>8} {s:>8}  {'yes' if e else 'no'}\n")
    else:
        out.write("n,p,s,exact\n")
        for n, p, s, e in rows:
            out.write(f"{n},{p},{s},{str(e).lower()}\n")
    return EXIT_OK


def cmd_classify(args, out):
    _check_lengths(args)
    src = _source(args)
    verdict = complexity.classify(src, args.max_length, args.horizon)
    out.write(json.dumps(verdict.to_json()) + "\n")
    return EXIT_OK


def cmd_decompose(args, out):
    src = _source(args)
    nfa = as_nfa(src)
    if nfa is None:
        raise InputError("decompose needs a regular language source")
    verdict = complexity.classify_nfa(nfa)
    if verdict.kind != "bounded":
        raise InputError("complexity is unbounded; witness: " + json.dumps(verdict.certificate.witness))
    cert = verdict.certificate
    check = automata.verify_triple_cover(nfa, cert.triples, args.mode, max(args.max_length, 0))
    if check.cap_exceeded:
        raise CapExceeded("determinization cap exceeded while checking the cover")
    doc = cert.to_json()
    doc["cover_check"] = {"mode": args.mode, "ok": check.ok}
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_verify(args, out):
    reports = verifier.run_suite(args.suite, args.seed, args.count)
    stream = "".join(r.to_json() + "\n" for r in reports)
    table = verifier.summarize(reports)
    summary = io.StringIO()
    summary.write(f"{'check':<16} {'pass':>6} {'fail':>6} {'undet':>6}\n")
    for name, row in table.items():
        summary.write(f"{name:<16} {row['pass']:>6} {row['fail']:>6} {row['undetermined']:>6}\n")
    failures = sum(row["fail"] for row in table.values())
    summary.write(f"failures: {failures}\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(stream)
        out.write(summary.getvalue())
    else:
        out.write(stream + summary.getvalue())
    return EXIT_FAIL if failures else EXIT_OK


def cmd_catalog(args, out):
    width = max(map(len, BUILTINS))
    for b in BUILTINS.values():
        out.write(f"{b.name:<{width}}  {b.description}\n")
        if b.note:
            out.write(f"{'':<{width}}  note: {b.note}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subcomplexity", description="Subword complexity of languages and words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default):
        p.add_argument("--builtin", metavar="NAME")
        p.add_argument("--input", metavar="FILE")
        p.add_argument("-n", "--max-length", type=int, default=n_default)
        p.add_argument("--horizon", type=int)
        p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("profile", help="p(n) and s(n) for n = 0..N")
    common(p, 10)
    p.add_argument("--format", choices=["csv", "json", "table"], default="csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("classify", help="bounded or linear complexity")
    common(p, 64)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="triple certificate of a bounded regular language")
    common(p, 12)
    p.add_argument("--mode", choices=["formal", "sampled"], default="formal")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a check suite")
    p.add_argument("--suite", default="all", choices=["all", *verifier.SUITES])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=50, help="random instances per suite")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list builtin languages")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (InputError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    if args.command != "verify" and args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
