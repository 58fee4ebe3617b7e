"""Command-line front end.

Subcommands: certify (full theorem run), word (one word), enumerate (SCC
census), lemma (degree verification), kernel (non-injectivity witness),
witness (non-conjugacy witness).  Rationals are given as "p/q" strings.
Exit codes: 0 success, 1 certification failure, 2 configuration rejected,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import certify as certify_mod
from .exact import parse_rational
from .rep import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    ParamError,
    SURFACE_GENUS2,
    SURFACE_PUNCTURED_TORUS,
    build_representation,
    evaluate,
    validate_params,
)
from .scc import enumerate_scc_classes
from .words import ParseError, free_reduce, parse_word

EXIT_OK = 0
EXIT_CERTIFICATION_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3

DEFAULT_SEED = 7

SURFACE_CHOICES = {
    "genus2": SURFACE_GENUS2,
    "punctured-torus": SURFACE_PUNCTURED_TORUS,
}


def _add_common(parser: argparse.ArgumentParser, surface: bool = True) -> None:
    if surface:
        parser.add_argument(
            "--surface", choices=sorted(SURFACE_CHOICES), default=None
        )
    parser.add_argument("--alpha", default=None, help='rational, e.g. "2" or "5/3"')
    parser.add_argument("--beta", default=None, help='rational, e.g. "-3"')
    parser.add_argument("--config", default=None, help="TOML file with defaults")
    parser.add_argument("--out", default=None, help="write output here instead of stdout")


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "rb") as handle:
        return tomllib.load(handle)


def _resolve_params(args: argparse.Namespace):
    """Merge config file and flags (flags win) into validated parameters."""
    config = _load_config(getattr(args, "config", None))
    alpha = args.alpha if args.alpha is not None else config.get("alpha", DEFAULT_ALPHA)
    beta = args.beta if args.beta is not None else config.get("beta", DEFAULT_BETA)
    surface_name = getattr(args, "surface", None)
    if surface_name is None:
        surface_name = config.get("surface", "genus2")
    if surface_name not in SURFACE_CHOICES:
        raise ParamError(f"unknown surface {surface_name!r}")
    if isinstance(alpha, str):
        alpha = parse_rational(alpha)
    if isinstance(beta, str):
        beta = parse_rational(beta)
    return validate_params(alpha, beta), SURFACE_CHOICES[surface_name], config


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")


def _report_text(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if fmt == "csv":
        lines = ["word,kind,power,trace,verdict,reason"]
        for row in report.rows:
            data = row.to_json()
            trace = " ".join(data["trace_poly"])
            lines.append(
                f'{data["word"]},{data["kind"]},{data["power"]},'
                f'"{trace}",{data["verdict"]},{data["reason"] or ""}'
            )
        return "\n".join(lines)
    lines = [
        f"surface: {report.surface}   alpha = {report.params.alpha}   "
        f"beta = {report.params.beta}   max_len = {report.max_len}",
        f"kernel witness: {certify_mod.KERNEL_WITNESS_TEXT} -> "
        f"{report.kernel_certificate.verdict}",
        f"non-conjugacy witness: {report.nonconjugacy.word} with trace "
        f"{report.nonconjugacy.trace}",
        f"certified {len(report.rows)} SCC class powers, "
        f"{len(report.failures)} failures",
    ]
    for failure in report.failures:
        lines.append(f"  FAIL {failure}")
    return "\n".join(lines)


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        params, surface, config = _resolve_params(args)
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    max_len = args.max_len if args.max_len is not None else config.get("max_len", 12)
    if max_len < 1:
        print("error: --max-len must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    rep = build_representation(params, surface)
    report = certify_mod.run_theorem_suite(rep, max_len)
    try:
        _emit(_report_text(report, args.format), args.out)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if not report.failures else EXIT_CERTIFICATION_FAILURE


def cmd_word(args: argparse.Namespace) -> int:
    try:
        params, surface, _ = _resolve_params(args)
        word = parse_word(args.word)
    except (ParamError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if not free_reduce(word):
        print("error: word is empty after free reduction", file=sys.stderr)
        return EXIT_CONFIG
    rep = build_representation(params, surface)
    try:
        matrix = evaluate(rep, word)
        cert = certify_mod.certify_word(rep, word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    lines = [
        str(matrix),
        f"trace: {cert.trace}",
        f"verdict: {cert.verdict}"
        + (f" (order {cert.order})" if cert.order else "")
        + (f" ({cert.reason})" if cert.reason else "")
        + (f": {cert.detail}" if cert.detail else ""),
    ]
    try:
        _emit("\n".join(lines), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_len < 1:
        print("error: --max-len must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    lines = [
        json.dumps(cls.to_json()) for cls in enumerate_scc_classes(args.max_len)
    ]
    try:
        _emit("\n".join(lines), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace) -> int:
    try:
        params, _, _ = _resolve_params(args)
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.trials < 1 or args.max_l < 1:
        print("error: --trials and --max-l must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    rep = build_representation(params, SURFACE_GENUS2)
    reports = certify_mod.verify_lemma_degrees(
        rep, args.trials, args.max_l, args.seed, args.allow_bad_hypotheses
    )
    eligible = [r for r in reports if r.hypothesis_ok]
    conforming = [r for r in eligible if r.conforms]
    excluded = len(reports) - len(eligible)
    summary = f"{len(conforming)}/{len(eligible)} conform"
    if excluded:
        summary += f" ({excluded} hypothesis-violating samples excluded)"
    try:
        _emit(summary, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if len(conforming) == len(eligible) else EXIT_CERTIFICATION_FAILURE


def cmd_kernel(args: argparse.Namespace) -> int:
    try:
        params, surface, _ = _resolve_params(args)
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    rep = build_representation(params, surface)
    word, cert = certify_mod.kernel_witness(rep)
    text = json.dumps(
        {**cert.to_json(), "word": certify_mod.KERNEL_WITNESS_TEXT, "reduced": word},
        indent=2,
    )
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if cert.verdict == certify_mod.IDENTITY else EXIT_CERTIFICATION_FAILURE


def cmd_witness(args: argparse.Namespace) -> int:
    try:
        params, surface, _ = _resolve_params(args)
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    witness = certify_mod.nonconjugacy_witness(params, surface)
    try:
        _emit(json.dumps(witness.to_json(), indent=2), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slcert",
        description="Exact certificates for PSL(2,R) surface-group "
        "representations that kill no power of a simple closed curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="run the full theorem suite")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=None, dest="max_len")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("word", help="certify a single word")
    p.add_argument("word", help='word text, e.g. "[x,y]" or "x^2 y"')
    _add_common(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("enumerate", help="list SCC classes as JSON lines")
    p.add_argument("--max-len", type=int, required=True, dest="max_len")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lemma", help="verify the alternating-word degree bounds")
    _add_common(p, surface=False)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-l", type=int, default=5, dest="max_l")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--allow-bad-hypotheses", action="store_true")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("kernel", help="print the non-injectivity witness")
    _add_common(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("witness", help="print the non-conjugacy witness")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
