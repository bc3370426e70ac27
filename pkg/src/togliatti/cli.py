"""Command-line front end: ``check``, ``smooth``, ``enumerate`` and ``verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import classify, toric
from .errors import PreconditionError, TogliattiError, TooLarge
from .monomials import canonical_form, parse_ideal, render_monomial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_TOO_LARGE = 3
EXIT_DISAGREE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2, which is reserved here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(result: classify.ClassificationResult) -> str:
    fields = [
        "ideal", "n", "d", "r", "togliatti", "wlp_kernel_dim", "hypersurface_dim",
        "minimal_removal", "minimal_prop33", "smooth", "matched_family",
    ]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for report in result.reports:
        writer.writerow(report.to_dict())
    return buf.getvalue()


def _lookup_family(ideal) -> str | None:
    table = classify.family_lookup(ideal.n, ideal.d, ideal.r)
    fid = table.get(canonical_form(ideal).generators)
    return str(fid) if fid else None


def cmd_check(args) -> int:
    ideal = parse_ideal(args.ideal, args.n, args.d)
    report = classify.check_ideal(ideal, with_smooth=args.with_smooth, family=_lookup_family(ideal))
    _emit(dumps(report.to_dict()), args.out)
    return EXIT_OK


def cmd_smooth(args) -> int:
    ideal = parse_ideal(args.ideal, args.n, args.d)
    verdict = toric.is_smooth(ideal)
    failures = [
        {"dim": face.dim, "points": [render_monomial(p) for p in face.points], "condition": cond}
        for face, cond in verdict.failures
    ]
    payload = {"ideal": canonical_form(ideal).render(), "smooth": verdict.smooth, "failures": failures}
    _emit(dumps(payload), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    result = classify.enumerate_minimal(
        args.n, args.d, args.mu,
        jobs=args.jobs, ceiling=args.ceiling, smooth_only=args.smooth_only, fixtures_dir=args.fixtures,
    )
    text = _csv(result) if args.format == "csv" else dumps(result.to_dict())
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = classify.verify_theorem(
        args.theorem, args.d, args.n, jobs=args.jobs, ceiling=args.ceiling, fixtures_dir=args.fixtures
    )
    _emit(dumps(report.to_dict()), args.out)
    return EXIT_OK if report.agrees_with_fixture else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="togliatti", description="Decide and classify monomial Togliatti systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ideal_args(p):
        p.add_argument("ideal", help='generators, e.g. "x0^3,x1^3,x2^3,x0*x1*x2"')
        p.add_argument("--n", type=int, required=True, help="number of variables minus one")
        p.add_argument("--d", type=int, required=True, help="generator degree")
        p.add_argument("--out")

    def search_args(p):
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--ceiling", type=int, default=classify.DEFAULT_CEILING)
        p.add_argument("--fixtures", default=None, help="directory overriding the bundled fixtures")
        p.add_argument("--out")

    p = sub.add_parser("check", help="full verdict for one ideal")
    ideal_args(p)
    p.add_argument("--with-smooth", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("smooth", help="smoothness of the associated toric variety")
    ideal_args(p)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("enumerate", help="all minimal systems with mu generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--smooth-only", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    search_args(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare an enumeration with a classification theorem")
    p.add_argument("--theorem", required=True, choices=("T36", "T37", "MAIN1", "MAIN2"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    search_args(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        code, err = EXIT_PRECONDITION, exc
    except TooLarge as exc:
        code, err = EXIT_TOO_LARGE, exc
    except (TogliattiError, ValueError, IndexError, OSError) as exc:
        code, err = EXIT_USAGE, exc
    print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
