"""Command line front end.

Every subcommand builds one structured document

    {"schema_version": 1, "command": ..., "inputs": ..., "result": ...,
     "witnesses": [...], "checks": [...]}

rendered as JSON under --json and as plain lines otherwise.  Exit status:
0 on success, 1 when --strict is set and the run produced a negative
verdict (NOT_EQUAL, false, a failed check, or an exhausted search), 2 on
any error; error documents carry {"error": {"code", "message"}} with the
stable code of the underlying exception.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional, Sequence

from .charts import (
    CyclicQuotientType,
    charts,
    is_terminal,
    is_terminal_blowup,
    pushforward_membership,
    reid_tai_ages,
)
from .contraction import contraction_profile, validate_profile
from .errors import InvalidArgumentError, InvalidWeightError, WblowupError
from .monomials import minimalize
from .parsing import (
    format_monomial,
    format_polynomial,
    parse_monomial,
    parse_polynomial,
    parse_weight,
)
from .symbolic import as_primary, symbolic_equals_ordinary, symbolic_power
from .weights import (
    find_normality_index,
    power_equality,
    sigma_wt,
    weighted_ideal_gens,
)

SCHEMA_VERSION = 1

Handler = Callable[[argparse.Namespace], tuple[dict, bool]]


def _document(
    command: str,
    inputs: dict,
    result: Any,
    witnesses: Sequence[str] = (),
    checks: Sequence[dict] = (),
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "witnesses": list(witnesses),
        "checks": list(checks),
    }


def _weight_inputs(args: argparse.Namespace) -> tuple:
    w = parse_weight(args.weight, args.n)
    return w, {"weight": list(w.entries), "n": w.n}


def _cmd_wt(args: argparse.Namespace) -> tuple[dict, bool]:
    w, inputs = _weight_inputs(args)
    f = parse_polynomial(args.polynomial, w.n)
    inputs["polynomial"] = format_polynomial(f)
    value = sigma_wt(w, f)
    return _document("wt", inputs, {"sigma_wt": value}), False


def _cmd_ideal(args: argparse.Namespace) -> tuple[dict, bool]:
    w, inputs = _weight_inputs(args)
    inputs["d"] = args.d
    ideal = weighted_ideal_gens(w, args.d)
    gens = [format_monomial(g) for g in ideal.generators]
    return _document("ideal", inputs, {"generators": gens, "count": len(gens)}), False


def _cmd_normality(args: argparse.Namespace) -> tuple[dict, bool]:
    w, inputs = _weight_inputs(args)
    if args.L is not None:
        if args.d is None:
            raise InvalidArgumentError("--d is required together with --L")
        inputs.update({"L": args.L, "d": args.d})
        verdict = power_equality(w, args.L, args.d)
        doc = _document(
            "normality",
            inputs,
            {"mode": "check", "verdict": verdict.verdict},
            witnesses=[format_monomial(verdict.witness)] if verdict.witness else [],
        )
        return doc, not verdict.equal
    if args.d_max is None or args.L_max is None:
        raise InvalidArgumentError("pass either --L with --d, or --d-max with --L-max")
    inputs.update({"d_max": args.d_max, "L_max": args.L_max})
    index = find_normality_index(w, args.d_max, args.L_max)
    doc = _document("normality", inputs, {"mode": "find", "normality_index": index})
    return doc, index is None


def _cmd_symbolic(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.gens is not None:
        if args.weight is not None:
            raise InvalidArgumentError("pass either --gens or --weight/--L, not both")
        monos = [parse_monomial(text.strip(), args.n) for text in args.gens.split(",")]
        ideal = minimalize(monos, args.n)
        inputs: dict = {"n": args.n, "generators": [format_monomial(g) for g in ideal.generators]}
    elif args.weight is not None:
        if args.L is None:
            raise InvalidArgumentError("--L is required together with --weight")
        w, inputs = _weight_inputs(args)
        inputs["L"] = args.L
        ideal = weighted_ideal_gens(w, args.L)
    else:
        raise InvalidArgumentError("pass either --gens, or --weight with --L")
    inputs["t"] = args.t
    primary = as_primary(ideal)
    sym = symbolic_power(primary, args.t)
    verdict = symbolic_equals_ordinary(primary, args.t)
    result = {
        "radical_vars": sorted(primary.radical_vars),
        "symbolic_generators": [format_monomial(g) for g in sym.generators],
        "verdict": verdict.verdict,
    }
    doc = _document(
        "symbolic",
        inputs,
        result,
        witnesses=[format_monomial(verdict.witness)] if verdict.witness else [],
    )
    return doc, not verdict.equal


def _cmd_charts(args: argparse.Namespace) -> tuple[dict, bool]:
    w, inputs = _weight_inputs(args)
    atlas = charts(w)
    chart_docs = [
        {
            "index": c.index,
            "quotient": {"order": c.quotient.order, "twists": list(c.quotient.twists)},
            "map": [format_monomial(m) for m in c.chart_map],
            "exceptional_coordinate": f"x{c.exceptional_var}",
        }
        for c in atlas.charts
    ]
    result = {"cartier_index": atlas.cartier_index, "charts": chart_docs}
    return _document("charts", inputs, result), False


def _cmd_terminal(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.r is not None:
        if args.twists is None:
            raise InvalidArgumentError("--twists is required together with --r")
        try:
            twists = tuple(int(p.strip()) for p in args.twists.split(","))
        except ValueError as exc:
            raise InvalidArgumentError(f"malformed twists {args.twists!r}") from exc
        q = CyclicQuotientType(args.r, twists)
        inputs = {"r": q.order, "twists": list(q.twists)}
        verdict = is_terminal(q)
        ages = [str(a) for a in reid_tai_ages(q)] if q.order >= 2 else []
        result = {"mode": "quotient", "terminal": verdict, "ages": ages}
        return _document("terminal", inputs, result), not verdict
    if args.weight is None:
        raise InvalidArgumentError("pass either --r with --twists, or --weight")
    w, inputs = _weight_inputs(args)
    verdict = is_terminal_blowup(w)
    chart_docs = [
        {
            "index": c.index,
            "order": c.quotient.order,
            "terminal": c.quotient.order < 2 or is_terminal(c.quotient),
        }
        for c in charts(w).charts
    ]
    result = {"mode": "blowup", "terminal": verdict, "charts": chart_docs}
    return _document("terminal", inputs, result), not verdict


def _cmd_push(args: argparse.Namespace) -> tuple[dict, bool]:
    w, inputs = _weight_inputs(args)
    f = parse_polynomial(args.polynomial, w.n)
    inputs.update({"d": args.d, "polynomial": format_polynomial(f)})
    member = pushforward_membership(w, args.d, f)
    return _document("push", inputs, {"member": member}), not member


def _cmd_profile(args: argparse.Namespace) -> tuple[dict, bool]:
    profile = contraction_profile(args.n, args.r, args.b)
    report = validate_profile(profile)
    inputs = {"n": args.n, "r": args.r, "b": args.b}
    result = {
        "tau": str(profile.tau),
        "weight": list(profile.weight.entries),
        "center_codim": profile.center_codim,
        "fiber_dim": profile.fiber_dim,
        "discrepancy": profile.discrepancy,
        "cartier_index": profile.charts.cartier_index,
        "terminal": profile.terminal,
        "all_checks_pass": report.all_pass,
    }
    checks = [
        {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
    ]
    return _document("profile", inputs, result, checks=checks), not report.all_pass


_HANDLERS: dict[str, Handler] = {
    "wt": _cmd_wt,
    "ideal": _cmd_ideal,
    "normality": _cmd_normality,
    "symbolic": _cmd_symbolic,
    "charts": _cmd_charts,
    "terminal": _cmd_terminal,
    "push": _cmd_push,
    "profile": _cmd_profile,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wblowup",
        description="Exact arithmetic for weighted blow-ups and their monomial ideals.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the document as JSON")
    common.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 on NOT_EQUAL / false / failed-check outcomes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def weighted(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--weight", required=required, help="positive entries, e.g. 10,14,35")
        p.add_argument("--n", type=int, required=required, help="ambient dimension")

    p = sub.add_parser("wt", parents=[common], help="weighted degree of a polynomial")
    weighted(p)
    p.add_argument("polynomial")

    p = sub.add_parser("ideal", parents=[common], help="minimal generators at a threshold")
    weighted(p)
    p.add_argument("--d", type=int, required=True, help="weighted-degree threshold")

    p = sub.add_parser(
        "normality", parents=[common], help="compare ideal powers against scaled thresholds"
    )
    weighted(p)
    p.add_argument("--L", type=int, help="threshold whose d-th power to test")
    p.add_argument("--d", type=int, help="power exponent (with --L)")
    p.add_argument("--d-max", type=int, dest="d_max", help="certify powers 2..d_max (find mode)")
    p.add_argument("--L-max", type=int, dest="L_max", help="largest threshold to scan (find mode)")

    p = sub.add_parser(
        "symbolic", parents=[common], help="symbolic vs ordinary powers of a primary ideal"
    )
    weighted(p, required=False)
    p.add_argument("--L", type=int, help="threshold when building the ideal from --weight")
    p.add_argument("--gens", help="comma-separated monomial generators, e.g. x1^2,x1*x2")
    p.add_argument("--t", type=int, required=True, help="power exponent")

    p = sub.add_parser("charts", parents=[common], help="chart atlas of the weighted blow-up")
    weighted(p)

    p = sub.add_parser(
        "terminal", parents=[common], help="Reid-Tai terminality of a quotient or a blow-up"
    )
    weighted(p, required=False)
    p.add_argument("--r", type=int, help="cyclic group order (with --twists)")
    p.add_argument("--twists", help="comma-separated twists, e.g. 2,2,1")

    p = sub.add_parser(
        "push", parents=[common], help="vanishing order along the exceptional divisor"
    )
    weighted(p)
    p.add_argument("--d", type=int, required=True, help="required vanishing order")
    p.add_argument("polynomial")

    p = sub.add_parser("profile", parents=[common], help="contraction profile and validation")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--r", type=int, required=True, help="number of weight-b entries")
    p.add_argument("--b", type=int, required=True, help="weight multiplicity")

    return parser


def _human_lines(doc: dict) -> list[str]:
    error = doc.get("error")
    if error is not None:
        return [f"error[{error['code']}]: {error['message']}"]
    lines = []
    for key, value in doc["result"].items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            for entry in value:
                rendered = ", ".join(f"{k}={v}" for k, v in entry.items())
                lines.append(f"{key}[]: {rendered}")
        elif isinstance(value, list):
            lines.append(f"{key}: {', '.join(str(v) for v in value)}")
        else:
            lines.append(f"{key}: {value}")
    if doc["witnesses"]:
        lines.append("witness: " + ", ".join(doc["witnesses"]))
    for check in doc["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        lines.append(f"[{status}] {check['name']}: {check['detail']}")
    return lines


def _emit(doc: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(_human_lines(doc)))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        doc, negative = handler(args)
    except WblowupError as exc:
        error_doc = _document(args.command, {}, None)
        error_doc["error"] = {"code": exc.code, "message": str(exc)}
        _emit(error_doc, args.json)
        return 2
    _emit(doc, args.json)
    if args.strict and negative:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
