"""Command-line surface.

Single computations, newline-delimited JSON batch evaluation, and the
verification battery.  All numerics are exact; decimal fields are labeled
approximate and exist only for display.

Exit codes: 0 success, 1 validation error (including unmet hypotheses on
input), 2 identity or envelope violation, 3 undecided exact comparison.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .castelnuovo import castelnuovo_bound
from .errors import (
    FlagboundError,
    IdentityViolationError,
    UndecidedComparisonError,
    ValidationError,
)
from .exact_arith import format_rational
from .flag_recurrence import (
    corollary_alternative_bound,
    corollary_bound,
    flag_genus_interval,
    speciality_bound,
)
from .flags import FlagCondition
from .hypothesis_checker import (
    Verdict,
    check_corollary_degree,
    check_flag_separation,
    check_lemma_degree,
)
from .lemma_engine import (
    LemmaInput,
    genus_from_lemma_input,
    quadratic_genus_bound,
    remainder_decomposition,
)
from .oracle_suite import verify_all


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; route through the validation path
    def error(self, message):
        raise ValidationError(message)


def _effective_budget(cli_value: int | None) -> int | None:
    # FLAGBOUND_DIGIT_BUDGET overrides --digit-budget when set
    if os.environ.get("FLAGBOUND_DIGIT_BUDGET", "").strip():
        return None
    return cli_value


def _flatten(doc: dict, prefix: str = "") -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = []
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            items.extend(_flatten(v, key + "."))
        elif isinstance(v, list):
            if v and all(isinstance(x, dict) for x in v):
                for i, x in enumerate(v):
                    items.extend(_flatten(x, f"{key}[{i}]."))
            else:
                items.append((key, "[" + ", ".join(str(x) for x in v) + "]"))
        else:
            items.append((key, v))
    return items


def _scalar_str(v: object) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v)


def _emit(doc: dict, fmt: str, table_lines: list[str] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(doc, separators=(",", ":")))
    elif fmt == "csv":
        flat = _flatten(doc)
        import csv as _csv

        writer = _csv.writer(sys.stdout)
        writer.writerow([k for k, _ in flat])
        writer.writerow([_scalar_str(v) for _, v in flat])
    else:
        if table_lines is not None:
            for line in table_lines:
                print(line)
        else:
            flat = _flatten(doc)
            width = max((len(k) for k, _ in flat), default=0)
            for k, v in flat:
                print(f"{k.ljust(width)} = {_scalar_str(v)}")


def _report_table(report_dict: dict) -> list[str]:
    lines = [f"subject            = {report_dict['subject']}"]
    lines.append(f"verdict            = {report_dict['verdict']}")
    for check in report_dict["checks"]:
        lines.append(
            f"[{check['verdict']:>9}] {check['label']}: {check['lhs']} "
            f"{check['relation']} {check['threshold']} "
            f"(approx {check['thresholdApprox']})"
        )
    return lines


def _cmd_castelnuovo(args) -> int:
    bound = castelnuovo_bound(args.N, args.deg)
    doc = {"N": args.N, "deg": args.deg, "bound": bound}
    _emit(doc, args.format, [f"bound = {bound}"])
    return 0


def _cmd_flag(args) -> int:
    flag = FlagCondition(args.r, tuple(args.degrees))
    result = flag_genus_interval(flag, _effective_budget(args.digit_budget))
    doc = result.to_dict()
    lines = [
        f"flag                = {flag}",
        f"lo                  = {doc['lo']}",
        f"hi                  = {doc['hi']}",
        f"hypothesesVerified  = {json.dumps(doc['hypothesesVerified'])}",
    ]
    if result.report is not None:
        lines.extend(_report_table(result.report.to_dict(args.digits)))
    _emit(doc, args.format, lines)
    return 0


def _read_json_source(path: str):
    if path == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}") from exc


def _lemma_doc(inp: LemmaInput) -> tuple[dict, bool]:
    decomposition = remainder_decomposition(inp)
    genus = genus_from_lemma_input(inp)
    bound = quadratic_genus_bound(inp.d, inp.s, inp.pi, decomposition.total)
    identity_holds = genus == bound
    doc = {
        "r": inp.r,
        "d": inp.d,
        "s": inp.s,
        "m": inp.m,
        "eps": inp.eps,
        "pi": inp.pi,
        "remainder": decomposition.to_dict(),
        "genus": genus,
        "bound": format_rational(bound),
        "identityHolds": identity_holds,
    }
    return doc, identity_holds


def _cmd_lemma(args) -> int:
    inp = LemmaInput.from_dict(_read_json_source(args.input))
    doc, identity_holds = _lemma_doc(inp)
    _emit(doc, args.format)
    if not identity_holds:
        print(
            f"identity violation: genus {doc['genus']} != bound {doc['bound']} "
            f"for input {inp.to_dict()}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_corollary(args) -> int:
    # The bound is meaningful arithmetic for any valid (r, d, s, pi); the
    # degree hypotheses gate only the dichotomy comparison, so their status
    # is reported instead of refusing to compute.
    bound = corollary_bound(args.r, args.d, args.s, args.pi)
    alternative = corollary_alternative_bound(args.r, args.d, args.s)
    report = check_corollary_degree(args.r, args.d, args.s, _effective_budget(args.digit_budget))
    doc = {
        "r": args.r,
        "d": args.d,
        "s": args.s,
        "pi": args.pi,
        "bound": format_rational(bound),
        "alternativeBound": format_rational(alternative),
        "degreeHypotheses": report.verdict.value,
    }
    if report.verdict is Verdict.PASS:
        doc["alternativeStrictlyLess"] = alternative < bound
    _emit(doc, args.format)
    return 3 if report.verdict is Verdict.UNDECIDED else 0


def _cmd_speciality(args) -> int:
    bound = speciality_bound(args.d, args.s, args.pi)
    doc = {
        "d": args.d,
        "s": args.s,
        "pi": args.pi,
        "bound": format_rational(bound),
    }
    _emit(doc, args.format, [f"bound = {format_rational(bound)}"])
    return 0


def _cmd_hypotheses(args) -> int:
    budget = _effective_budget(args.digit_budget)
    if args.subject == "flag":
        report = check_flag_separation(FlagCondition(args.r, tuple(args.degrees)), budget)
    elif args.subject == "corollary":
        report = check_corollary_degree(args.r, args.d, args.s, budget)
    else:
        report = check_lemma_degree(args.r, args.d, args.s)
    doc = report.to_dict(args.digits)
    _emit(doc, args.format, _report_table(doc))
    return 3 if report.verdict is Verdict.UNDECIDED else 0


def _parse_pair(text: str, label: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(f"{label} must be two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValidationError(f"{label} must be two comma-separated integers, got {text!r}") from exc


def _cmd_verify(args) -> int:
    r_max, s_max = _parse_pair(args.grid, "--grid")
    n_max, deg_max = _parse_pair(args.castelnuovo_grid, "--castelnuovo-grid")
    report = verify_all(
        r_max=r_max,
        s_max=s_max,
        seeds=args.seeds,
        n_max=n_max,
        deg_max=deg_max,
        flag_count=args.flags,
        corollary_count=args.corollary_cases,
        radical_count=args.radicals,
        rng_seed=args.seed,
    )
    doc = report.to_dict()
    lines = []
    for row in report.rows:
        status = "PASS" if row.passed else "FAIL"
        lines.append(
            f"[{status}] {row.name:<28} cases={row.cases:<6} failures={row.failures}"
            + (f"  ({row.detail})" if row.detail else "")
        )
    lines.append("overall: " + ("PASS" if report.ok else "FAIL"))
    _emit(doc, args.format, lines)
    return 0 if report.ok else 2


_BATCH_REQUIRED = {
    "castelnuovo": ("N", "deg"),
    "flag": ("r", "degrees"),
    "lemma": ("input",),
    "corollary": ("r", "d", "s", "pi"),
    "speciality": ("d", "s", "pi"),
}


def _batch_eval(record: dict, digits: int, budget: int | None) -> dict:
    if not isinstance(record, dict):
        raise ValidationError(f"batch record must be an object, got {type(record).__name__}")
    op = record.get("op")
    if op not in _BATCH_REQUIRED:
        raise ValidationError(f"unknown batch op {op!r}")
    missing = [k for k in _BATCH_REQUIRED[op] if k not in record]
    if missing:
        raise ValidationError(f"batch op {op!r} missing fields: {', '.join(missing)}")
    if op == "castelnuovo":
        return {"bound": castelnuovo_bound(int(record["N"]), int(record["deg"]))}
    if op == "flag":
        flag = FlagCondition(int(record["r"]), tuple(int(x) for x in record["degrees"]))
        return flag_genus_interval(flag, budget).to_dict()
    if op == "lemma":
        doc, identity_holds = _lemma_doc(LemmaInput.from_dict(record["input"]))
        if not identity_holds:
            raise IdentityViolationError(
                f"genus {doc['genus']} != bound {doc['bound']}"
            )
        return doc
    if op == "corollary":
        r, d, s, pi = (int(record[k]) for k in ("r", "d", "s", "pi"))
        return {
            "bound": format_rational(corollary_bound(r, d, s, pi)),
            "alternativeBound": format_rational(corollary_alternative_bound(r, d, s)),
            "degreeHypotheses": check_corollary_degree(r, d, s, budget).verdict.value,
        }
    d, s, pi = (int(record[k]) for k in ("d", "s", "pi"))
    return {"bound": format_rational(speciality_bound(d, s, pi))}


def _cmd_batch(args) -> int:
    if args.input == "-":
        stream = sys.stdin
        close = False
    else:
        try:
            stream = open(args.input, "r", encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"cannot read {args.input}: {exc}") from exc
        close = True
    budget = _effective_budget(args.digit_budget)
    any_failed = False
    try:
        for line in stream:
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                result = _batch_eval(record, args.digits, budget)
                print(json.dumps({"ok": True, "result": result}, separators=(",", ":")))
            except FlagboundError as exc:
                any_failed = True
                print(
                    json.dumps(
                        {"ok": False, "error": str(exc), "input": line},
                        separators=(",", ":"),
                    )
                )
            except json.JSONDecodeError as exc:
                any_failed = True
                print(
                    json.dumps(
                        {"ok": False, "error": f"invalid JSON: {exc}", "input": line},
                        separators=(",", ":"),
                    )
                )
    finally:
        if close:
            stream.close()
    return 1 if any_failed else 0


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # suppress=True variants are for nested subparsers, whose defaults would
    # otherwise clobber values already parsed by the outer command
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json", "csv"), default=default("table"),
        help="output format (default: table)",
    )
    common.add_argument(
        "--digits", type=int, default=default(20),
        help="significant digits for approximate decimal renderings (default: 20)",
    )
    common.add_argument(
        "--digit-budget", type=int, default=default(None),
        help="digit cap for exact radical powering before the enclosure "
        "fallback; FLAGBOUND_DIGIT_BUDGET overrides",
    )
    return common


def _build_parser() -> _Parser:
    common = _common_options(suppress=False)
    common_nested = _common_options(suppress=True)

    parser = _Parser(prog="flagbound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("castelnuovo", parents=[common], help="maximal genus in P^N")
    p.add_argument("N", type=int)
    p.add_argument("deg", type=int)
    p.set_defaults(func=_cmd_castelnuovo)

    p = sub.add_parser("flag", parents=[common], help="genus interval under a flag condition")
    p.add_argument("r", type=int)
    p.add_argument("degrees", type=int, nargs="+", metavar="S")
    p.set_defaults(func=_cmd_flag)

    p = sub.add_parser("lemma", parents=[common], help="remainder decomposition and genus")
    p.add_argument("--input", required=True, help="JSON file with the lemma input ('-' for stdin)")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("corollary", parents=[common], help="closed quadratic bound and dichotomy")
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.add_argument("s", type=int)
    p.add_argument("pi", type=int)
    p.set_defaults(func=_cmd_corollary)

    p = sub.add_parser("speciality", parents=[common], help="speciality index bound")
    p.add_argument("d", type=int)
    p.add_argument("s", type=int)
    p.add_argument("pi", type=int)
    p.set_defaults(func=_cmd_speciality)

    p = sub.add_parser("hypotheses", parents=[common], help="evaluate hypothesis inequalities")
    hyp = p.add_subparsers(dest="subject", required=True)
    ph = hyp.add_parser("flag", parents=[common_nested])
    ph.add_argument("r", type=int)
    ph.add_argument("degrees", type=int, nargs="+", metavar="S")
    ph = hyp.add_parser("corollary", parents=[common_nested])
    ph.add_argument("r", type=int)
    ph.add_argument("d", type=int)
    ph.add_argument("s", type=int)
    ph = hyp.add_parser("lemma", parents=[common_nested])
    ph.add_argument("r", type=int)
    ph.add_argument("d", type=int)
    ph.add_argument("s", type=int)
    p.set_defaults(func=_cmd_hypotheses)

    p = sub.add_parser("verify", parents=[common], help="run the identity battery")
    p.add_argument("--grid", default="10,200", help="rMax,sMax for identity scans (default 10,200)")
    p.add_argument(
        "--castelnuovo-grid", default="9,300", help="nMax,degMax for the bound scan (default 9,300)"
    )
    p.add_argument("--seeds", type=int, default=1000, help="randomized lemma inputs (default 1000)")
    p.add_argument("--flags", type=int, default=200, help="random flags for the width law")
    p.add_argument("--corollary-cases", type=int, default=50)
    p.add_argument("--radicals", type=int, default=500)
    p.add_argument("--seed", type=int, default=20260814, help="RNG seed")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("batch", parents=[common], help="evaluate newline-delimited JSON records")
    p.add_argument("--input", default="-", help="NDJSON file (default stdin)")
    p.set_defaults(func=_cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UndecidedComparisonError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 3
    except IdentityViolationError as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FlagboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
