"""Command-line surface.

Subcommands: validate, features, iso, reduce, connect, enumerate, random.
Exit codes: 0 on success (or a true answer), 1 on a false answer, 2 on an
input error.  Errors go to stderr; all outputs are deterministic for
identical inputs and flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .connector import connect, verify_certificate
from .cover import MarkedCover, PortraitError, derive_portrait, validate_cover
from .features import classify
from .formats import (
    describe_features,
    export_dot,
    features_summary,
    parse_portrait,
    serialize_certificate,
    serialize_portrait,
    serialize_trace,
)
from .moves import apply_move
from .oracle import enumerate_portraits, random_cover
from .reducer import reduce as reduce_cover
from .reducer import verify_step_bounds


def _load(path: str) -> MarkedCover:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PortraitError(f"cannot read {path}: {exc}") from exc
    return parse_portrait(text)


def _render(cover: MarkedCover, fmt: str) -> str:
    if fmt == "dot":
        return export_dot(derive_portrait(cover))
    return serialize_portrait(cover)


def _cmd_validate(args: argparse.Namespace) -> int:
    report = validate_cover(_load(args.file))
    if report.passed:
        print("pass")
        return 0
    for violation in report.violations:
        print(f"fail {violation.rule} at {' '.join(violation.points)}")
    return 1


def _cmd_features(args: argparse.Namespace) -> int:
    cover = _load(args.file)
    print(features_summary(classify(derive_portrait(cover))))
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    from .features import features_isomorphic

    p = derive_portrait(_load(args.file1))
    q = derive_portrait(_load(args.file2))
    if features_isomorphic(p, q):
        print("isomorphic")
        return 0
    print("not isomorphic")
    return 1


def _cmd_reduce(args: argparse.Namespace) -> int:
    cover = _load(args.file)
    trace = reduce_cover(cover)
    bounds = verify_step_bounds(trace)
    for entry in trace.entries:
        what = entry.move.function_tag if entry.move else "verify"
        print(f"{entry.step.value} {what}: {describe_features(entry.features)}")
    print(
        f"runs: step1={trace.step1_runs} step2={trace.step2_runs} "
        f"step3={trace.step3_runs} (expected step3={bounds.step3_expected}) "
        f"minted={trace.minted_count}"
    )
    print(_render(trace.final, args.format), end="")
    if args.trace:
        Path(args.trace).write_text(serialize_trace(trace), encoding="utf-8")
    if args.dot_dir:
        directory = Path(args.dot_dir)
        directory.mkdir(parents=True, exist_ok=True)
        work = trace.initial
        (directory / "000_initial.dot").write_text(
            export_dot(derive_portrait(work)), encoding="utf-8"
        )
        for i, entry in enumerate(trace.entries, start=1):
            if entry.move is not None:
                work = apply_move(work, entry.move)
            name = entry.move.function_tag if entry.move else f"verify-{entry.step.value}"
            (directory / f"{i:03d}_{name}.dot").write_text(
                export_dot(derive_portrait(work)), encoding="utf-8"
            )
    return 0


def _cmd_connect(args: argparse.Namespace) -> int:
    g = _load(args.file1)
    h = _load(args.file2)
    cert = connect(g, h)
    verified = cert.verified and verify_certificate(g, h, cert)
    print(f"swaps: {cert.swap_count}")
    print(f"final: {describe_features(cert.final_features)}")
    print("verified" if verified else "NOT verified")
    if args.cert:
        Path(args.cert).write_text(serialize_certificate(cert, g), encoding="utf-8")
    return 0 if verified else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    covers = enumerate_portraits(args.n, workers=args.workers)
    print(f"{len(covers)} classes on at most {args.n} vertices")
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for i, cover in enumerate(covers):
            path = directory / f"class_{i:04d}.por"
            path.write_text(serialize_portrait(cover), encoding="utf-8")
    return 0


def _cmd_random(args: argparse.Namespace) -> int:
    cover = random_cover(args.n, args.seed)
    print(_render(cover, args.format), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadportrait",
        description="Portraits of marked quadratic covers: classify, rewrite, connect.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "dot"),
        default="text",
        help="rendering used when a cover is printed",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the quadratic portrait rules")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("features", help="classify a portrait")
    p.add_argument("file")
    p.set_defaults(func=_cmd_features)

    p = sub.add_parser("iso", help="decide portrait isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("reduce", help="reduce to the squaring-map portrait")
    p.add_argument("file")
    p.add_argument("--trace", help="write the reduction trace to this file")
    p.add_argument("--dot-dir", help="write one DOT file per step state")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("connect", help="build and verify a path between two covers")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--cert", help="write the path certificate to this file")
    p.set_defaults(func=_cmd_connect)

    p = sub.add_parser("enumerate", help="enumerate portrait classes up to a size")
    p.add_argument("n", type=int)
    p.add_argument("--out", help="write one portrait file per class")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("random", help="sample a seeded random valid cover")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_random)

    return parser


def run_cli(args: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return namespace.func(namespace)
    except PortraitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run_cli(argv))
