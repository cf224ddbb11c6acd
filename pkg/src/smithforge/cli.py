"""Command-line interface.

Subcommands: analyze (structure report), certify (matrix divisibility),
det (determinant vs closed forms), search (hunt for divisibility failures).

Exit codes: 0 success / verdict "divides" / report written; 1 verdict
"does-not-divide" or a closed-form mismatch; 2 invalid input; 3 internal
cross-check mismatch (never expected; it means a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import prod

from . import divstruct, exmat, genlab, smithcore
from .errors import BadRange, InternalMismatch, MalformedInput, SmithforgeError

__all__ = ["main"]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _parse_inline_set(text: str) -> list[int]:
    toks = [t for t in text.replace(",", " ").split() if t]
    if not toks:
        raise MalformedInput("empty --set value")
    try:
        return [int(t) for t in toks]
    except ValueError as exc:
        raise MalformedInput(f"bad --set value: {exc}") from None


def _load_set(args) -> tuple[divstruct.DivisorSet, bool]:
    """Returns (set, input_was_presorted)."""
    if args.set is not None:
        values = _parse_inline_set(args.set)
        return divstruct.DivisorSet(values), values == sorted(values)
    s = divstruct.load_set_file(args.set_file)
    return s, True


def _add_set_source(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--set", help="inline elements, e.g. '1,2,3,6'")
    group.add_argument("--set-file", help="path to a set file (JSON or whitespace text)")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_json(path: str, obj) -> None:
    _write_text(path, json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _ext(path: str) -> str:
    return os.path.splitext(path)[1].lower()


# -- analyze -------------------------------------------------------------------


def _analyze_report(s: divstruct.DivisorSet, presorted: bool) -> dict:
    report: dict = {
        "elements": list(s.elements),
        "input_sorted": presorted,
        "gcd_closed": s.is_gcd_closed(),
        "factor_closed": s.is_factor_closed(),
        "chain": s.is_chain(),
        "greatest_type_divisors": {str(x): list(s.greatest_type_divisors(x)) for x in s.elements},
    }
    if s.is_gcd_closed():
        g = s.check_condition_g()
        witness = None
        if g.witness is not None:
            w = g.witness
            witness = {"x": w.x, "y1": w.y1, "y2": w.y2, "reason": w.reason}
        report["condition_g"] = {"holds": g.holds, "witness": witness}
    else:
        report["condition_g"] = None
    return report


def _cmd_analyze(args) -> int:
    s, presorted = _load_set(args)
    report = _analyze_report(s, presorted)
    print(f"elements ({len(s)}): {' '.join(str(x) for x in s.elements)}")
    print(f"input already sorted: {'yes' if presorted else 'no'}")
    print(f"gcd-closed: {'yes' if report['gcd_closed'] else 'no'}")
    print(f"factor-closed: {'yes' if report['factor_closed'] else 'no'}")
    print(f"divisor chain: {'yes' if report['chain'] else 'no'}")
    print("greatest-type divisors:")
    for x in s.elements:
        gtds = s.greatest_type_divisors(x)
        shown = " ".join(str(d) for d in gtds) if gtds else "(none)"
        print(f"  {x}: {shown}")
    cond = report["condition_g"]
    if cond is None:
        print("condition G: not applicable (set is not gcd-closed)")
    elif cond["holds"]:
        print("condition G: holds")
    else:
        w = cond["witness"]
        print(f"condition G: fails (x={w['x']}, y1={w['y1']}, y2={w['y2']}, reason={w['reason']})")
    if args.out:
        if _ext(args.out) != ".json":
            raise MalformedInput(f"analyze only writes .json, got {args.out!r}")
        _write_json(args.out, report)
    return 0


# -- certify -------------------------------------------------------------------


def _cmd_certify(args) -> int:
    s, _ = _load_set(args)
    cert = smithcore.certify_divisibility(s, args.a, args.b, args.kind)
    print(f"set: {' '.join(str(x) for x in s.elements)}")
    print(f"claim: (power gcd matrix, a={args.a}) divides (power {args.kind} matrix, b={args.b})")
    print(f"verdict: {cert.verdict}")
    if cert.witness is not None:
        w = cert.witness
        print(f"witness: quotient entry ({w.row}, {w.col}) = {w.value}")
    if args.out:
        ext = _ext(args.out)
        if ext == ".json":
            _write_json(args.out, smithcore.certificate_to_json_obj(cert))
        elif ext == ".csv":
            quotient = (
                cert.quotient
                if cert.quotient is not None
                else smithcore.quotient_from_kernels(s, args.a, args.b, args.kind)
            )
            _write_text(args.out, exmat.to_csv_text(quotient))
        else:
            raise MalformedInput(f"certify writes .json or .csv, got {args.out!r}")
    return 0 if cert.verdict == "divides" else 1


# -- det -----------------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise BadRange(f"range must look like LO..HI, got {text!r}")
    try:
        lo_v, hi_v = int(lo), int(hi)
    except ValueError:
        raise BadRange(f"range must look like LO..HI with integers, got {text!r}") from None
    if lo_v < 1 or hi_v < lo_v:
        raise BadRange(f"need 1 <= LO <= HI, got {text!r}")
    return lo_v, hi_v


def _cmd_det(args) -> int:
    if args.range is not None:
        lo, hi = _parse_range(args.range)
        s = divstruct.DivisorSet(range(lo, hi + 1))
    else:
        s, _ = _load_set(args)
        lo = None
    matrix = exmat.power_gcd_matrix(s, args.a)
    d = exmat.det(matrix)
    closed_forms: list[tuple[str, int]] = []
    if args.range is not None and lo == 1:
        closed_forms.append(("jordan-product", smithcore.smith_determinant(s.elements[-1], args.a)))
    if args.range is not None and lo == 2:
        closed_forms.append(
            ("jordan-squarefree-sum", smithcore.squarefree_sum_determinant(s.elements[-1], args.a))
        )
    if s.is_gcd_closed():
        closed_forms.append(("alpha-product", prod(smithcore.alpha(s, args.a, x) for x in s.elements)))
    match = all(v == d for _, v in closed_forms)
    print(f"set: {' '.join(str(x) for x in s.elements)}")
    print(f"det (power gcd matrix, a={args.a}) = {d}")
    for name, value in closed_forms:
        print(f"closed form [{name}] = {value}")
    if closed_forms:
        print(f"verdict: {'MATCH' if match else 'MISMATCH'}")
    else:
        print("verdict: no closed form applies (set is not gcd-closed)")
    if args.out:
        if _ext(args.out) != ".json":
            raise MalformedInput(f"det only writes .json, got {args.out!r}")
        _write_json(
            args.out,
            {
                "elements": list(s.elements),
                "a": args.a,
                "determinant": d,
                "closed_forms": [{"name": n, "value": v} for n, v in closed_forms],
                "match": match,
            },
        )
    return 0 if match else 1


# -- search --------------------------------------------------------------------


def _cmd_search(args) -> int:
    kinds = tuple(k for k in args.kinds.split(",") if k)
    for kind in kinds:
        if kind not in (smithcore.KIND_GCD, smithcore.KIND_LCM):
            raise MalformedInput(f"--kinds entries must be gcd or lcm, got {kind!r}")
    if not kinds:
        raise MalformedInput("--kinds must name at least one of gcd, lcm")
    if _ext(args.out) != ".jsonl":
        raise MalformedInput(f"search writes .jsonl, got {args.out!r}")
    findings = genlab.search_failures(
        max_n=args.max_n,
        max_elem=args.max_elem,
        max_exp=args.max_exp,
        kinds=kinds,
        seed=args.seed,
        candidates=args.candidates,
    )
    count = genlab.write_findings(findings, args.out)
    print(f"{count} finding(s) written to {args.out}")
    return 0


# -- parser --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smithforge",
        description="Exact power gcd/lcm matrix toolkit: structure analysis, "
        "determinant closed forms, and matrix divisibility certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="report divisibility structure of a set")
    _add_set_source(p_analyze)
    p_analyze.add_argument("--out", help="write the report as JSON")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_certify = sub.add_parser("certify", help="certify or refute matrix divisibility")
    _add_set_source(p_certify)
    p_certify.add_argument("--a", type=_positive_int, required=True, help="divisor exponent")
    p_certify.add_argument("--b", type=_positive_int, required=True, help="dividend exponent")
    p_certify.add_argument(
        "--kind", choices=(smithcore.KIND_GCD, smithcore.KIND_LCM), default=smithcore.KIND_GCD,
        help="dividend matrix kind (default gcd)",
    )
    p_certify.add_argument("--out", help="write the certificate (.json) or quotient (.csv)")
    p_certify.set_defaults(func=_cmd_certify)

    p_det = sub.add_parser("det", help="exact determinant with closed-form cross-checks")
    group = p_det.add_mutually_exclusive_group(required=True)
    group.add_argument("--range", help="consecutive integers LO..HI")
    group.add_argument("--set", help="inline elements, e.g. '2,3,4'")
    group.add_argument("--set-file", help="path to a set file")
    p_det.add_argument("--a", type=_positive_int, required=True, help="matrix exponent")
    p_det.add_argument("--out", help="write the result as JSON")
    p_det.set_defaults(func=_cmd_det)

    p_search = sub.add_parser("search", help="search for divisibility failures")
    p_search.add_argument("--max-n", type=_positive_int, default=genlab.DEFAULT_MAX_N)
    p_search.add_argument("--max-elem", type=_positive_int, default=genlab.DEFAULT_MAX_ELEM)
    p_search.add_argument("--max-exp", type=_positive_int, default=genlab.DEFAULT_MAX_EXP)
    p_search.add_argument("--kinds", default="gcd,lcm", help="comma list of gcd,lcm")
    p_search.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("SMITHFORGE_SEED", "0")),
        help="deterministic seed (default: SMITHFORGE_SEED env var, else 0)",
    )
    p_search.add_argument("--candidates", type=_positive_int, default=200,
                          help="number of candidate sets to examine")
    p_search.add_argument("--out", required=True, help="findings file (.jsonl)")
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except SmithforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
