"""Command-line front end: ``polycert classify | section | survey | corpus``.

Exit codes for ``classify``: 0 strictly positive, 1 nonnegative with
zeros, 2 indefinite.  Usage errors exit with 64 on every subcommand.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dispatch import agrees, classify
from .evendeg import appendix_witnesses, discriminant_sign_survey
from .exactpoly import Poly, format_rational, parse_rational
from .parallel import parallel_map, worker_count
from .quartic import Plane, region_cross_section
from .sturm import oracle_classify
from .types import Certificate, CertificateConflict, Classification, Region, Verdict

EX_USAGE = 64
EX_NOINPUT = 66
EX_SOFTWARE = 70
EX_CANTCREAT = 73

EXIT_CODES = {Verdict.STRICTLY_POSITIVE: 0, Verdict.NONNEGATIVE_WITH_ZEROS: 1, Verdict.INDEFINITE: 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "indefinite"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ClassifyRequest:
    coeffs: Poly
    region: Region
    check_oracle: bool = False

    def __post_init__(self) -> None:
        if self.coeffs.degree < 1:
            raise UsageError("polynomial must have degree >= 1")


@dataclass(frozen=True)
class ClassifyResponse:
    request: ClassifyRequest
    classification: Classification
    certificate: Certificate
    oracle_agrees: Optional[bool] = None

    def to_json(self) -> dict:
        c = self.classification
        out = {
            "input": str(self.request.coeffs),
            "region": self.request.region.value,
            "classification": c.verdict.value,
            "zeros": [z.to_json() for z in c.zeros],
            "witness": None if c.witness is None else format_rational(c.witness),
            "certificate": self.certificate.to_json(),
        }
        if self.request.check_oracle:
            out["oracle_agrees"] = self.oracle_agrees
        return out


def run_classify(req: ClassifyRequest) -> ClassifyResponse:
    cls, cert = classify(req.coeffs, req.region)
    ok = agrees(cls, oracle_classify(req.coeffs, req.region)) if req.check_oracle else None
    return ClassifyResponse(req, cls, cert, ok)


def parse_poly(text: str) -> Poly:
    try:
        p = Poly.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if p.is_zero():
        raise UsageError("zero polynomial")
    return p


def parse_region(text: str) -> Region:
    try:
        return Region(text.strip())
    except ValueError:
        raise UsageError(f"unknown region {text.strip()!r} (use half-line or real-line)") from None


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"range {text!r} must look like lo:hi")
    try:
        lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lo > hi:
        raise UsageError(f"range {text!r} has lo > hi")
    return lo, hi


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def cmd_classify(args) -> int:
    req = ClassifyRequest(parse_poly(args.poly), parse_region(args.region), args.check_oracle)
    try:
        resp = run_classify(req)
    except CertificateConflict as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EX_SOFTWARE
    print(_dump(resp.to_json()))
    return EXIT_CODES[resp.classification.verdict]


def _section_row(job) -> list:
    plane, alpha, beta_lo, beta_hi, step = job
    return region_cross_section(plane, alpha, alpha, beta_lo, beta_hi, step)


def section_csv(plane: Plane, alpha: tuple, beta: tuple, step: Fraction) -> str:
    if step <= 0:
        raise UsageError("step must be positive")
    alphas = []
    a = alpha[0]
    while a <= alpha[1]:
        alphas.append(a)
        a += step
    rows = parallel_map(_section_row, [(plane, a, beta[0], beta[1], step) for a in alphas], chunksize=4)
    lines = ["alpha,beta,class"]
    for row in rows:
        lines += [f"{format_rational(x)},{format_rational(y)},{cls.value}" for x, y, cls in row]
    return "\n".join(lines) + "\n"


def cmd_section(args) -> int:
    plane = Plane(args.plane)
    try:
        step = parse_rational(args.step)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = section_csv(plane, parse_range(args.alpha), parse_range(args.beta), step)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EX_CANTCREAT
    return 0


def _survey_map(fn, items):
    return parallel_map(fn, items, chunksize=64)


def cmd_survey(args) -> int:
    if args.degree < 4 or args.degree % 2:
        raise UsageError(f"--degree must be even and >= 4, got {args.degree}")
    if args.samples < 0 or args.coeff_bound < 1:
        raise UsageError("--samples must be >= 0 and --coeff-bound >= 1")
    inject = appendix_witnesses(args.degree) if args.inject_appendix else ()
    report = discriminant_sign_survey(args.degree, args.samples, args.seed, args.coeff_bound, args.rational,
                                      inject, mapper=_survey_map)
    print(report.to_json())
    return 0 if report.lock_holds else 1


@dataclass(frozen=True)
class CorpusLine:
    lineno: int
    poly: Poly
    region: Region
    expected: Verdict


def parse_corpus(text: str) -> tuple[list[CorpusLine], list[str]]:
    entries, errors = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        try:
            if len(parts) != 3:
                raise UsageError("expected 'coeffs ; region ; expected_classification'")
            poly = parse_poly(parts[0])
            if poly.degree < 1:
                raise UsageError("polynomial must have degree >= 1")
            region = parse_region(parts[1])
            try:
                expected = Verdict(parts[2])
            except ValueError:
                raise UsageError(f"unknown classification {parts[2]!r}") from None
        except UsageError as exc:
            errors.append(f"line {lineno}: parse error: {exc}")
            continue
        entries.append(CorpusLine(lineno, poly, region, expected))
    return entries, errors


def _corpus_entry(entry: CorpusLine) -> str:
    try:
        resp = run_classify(ClassifyRequest(entry.poly, entry.region, True))
    except CertificateConflict as exc:
        return f"line {entry.lineno}: FAIL certificate conflict: {exc}"
    got = resp.classification.verdict
    if got is not entry.expected:
        return f"line {entry.lineno}: FAIL expected {entry.expected.value}, got {got.value} ({resp.certificate.method} {resp.certificate.case})"
    if not resp.oracle_agrees:
        return f"line {entry.lineno}: FAIL oracle disagrees ({resp.certificate.method} {resp.certificate.case})"
    return f"line {entry.lineno}: PASS {got.value} ({resp.certificate.method} {resp.certificate.case})"


def cmd_corpus(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EX_NOINPUT
    entries, errors = parse_corpus(text)
    results = parallel_map(_corpus_entry, entries, chunksize=8)
    failed = [r for r in results if " FAIL " in r]
    for _, line in sorted(zip([e.lineno for e in entries] + [_lineno(e) for e in errors], results + errors)):
        print(line)
    passed = len(results) - len(failed)
    print(f"{passed} passed, {len(failed) + len(errors)} failed")
    return 0 if not failed and not errors else 1


def _lineno(message: str) -> int:
    return int(message.split(":", 1)[0].split()[1])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polycert", description="Exact positivity certificates for low-degree polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one polynomial")
    p.add_argument("--poly", required=True, help='coefficients, highest degree first, e.g. "1,-1,0,0,-1,1"')
    p.add_argument("--region", default="half-line", help="half-line (default) or real-line")
    p.add_argument("--check-oracle", action="store_true", help="cross-check against the Sturm oracle")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("section", help="quartic cone cross-section as CSV")
    p.add_argument("--plane", required=True, choices=[x.value for x in Plane])
    p.add_argument("--alpha", required=True, help="lo:hi")
    p.add_argument("--beta", required=True, help="lo:hi")
    p.add_argument("--step", required=True, help="positive rational, e.g. 1/4")
    p.add_argument("--out", help="output path (default: standard output)")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("survey", help="discriminant signs of random even-degree polynomials")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-bound", type=int, default=4)
    p.add_argument("--rational", action="store_true", help="draw denominators in [1, coeff-bound] too")
    p.add_argument("--inject-appendix", action="store_true", help="add known appendix members to the sample")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("corpus", help="check a file of expected classifications")
    p.add_argument("path")
    p.set_defaults(func=cmd_corpus)
    return parser


_RANGE_FLAGS = ("--alpha", "--beta", "--step")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--alpha -8:8`` into ``--alpha=-8:8`` so argparse does not read ``-8:8`` as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        worker_count()
        return args.func(args)
    except UsageError as exc:
        print(f"polycert: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ValueError as exc:
        print(f"polycert: error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
