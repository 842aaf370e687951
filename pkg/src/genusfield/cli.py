"""Command-line front end: compute, classify, verify and batch-scan.

Every command renders the same document structure in text or JSON; JSON
output is byte-stable (sorted keys) and validates against
schema/output.v1.json.  Exit codes: 0 success, 1 internal/verification
failure, 2 unsupported prime, 3 signature not covered, 4 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TextIO

from .arith import Factorization, factor_squarefree, factorization_from_primes
from .classify import CaseSignature, make_signature
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import Degenerate, GenusFieldError, NotCoveredError
from .genus import GenusField, build_generators, field_description, lift_to_level
from .verify import VerificationReport, full_report

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------- documents


def _signature_dict(sig: CaseSignature) -> dict[str, Any]:
    return {
        "r": sig.r,
        "s": sig.s,
        "t": sig.t,
        "n": sig.n,
        "case_id": sig.case_id if sig.covered else "NotCovered",
        "sub_branch": sig.sub_branch,
        "quartic_signs": list(sig.quartic_signs),
    }


def _report_dict(report: VerificationReport) -> dict[str, Any]:
    return {
        "overall": report.overall,
        "independence_ok": report.independence_ok,
        "count_matches_rank": report.count_matches_rank,
        "generators": [
            {
                "display": c.display,
                "norm_ok": c.norm_ok,
                "ideal_square_ok": c.ideal_square_ok,
                "square_mod4_ok": c.square_mod4_ok,
            }
            for c in report.generator_checks
        ],
    }


def make_document(
    d: int,
    m: int,
    f: Factorization,
    sig: CaseSignature,
    gf: GenusField | None,
    report: VerificationReport | None,
    extra_notes: list[str] | None = None,
) -> dict[str, Any]:
    notes = list(gf.notes) if gf is not None else []
    notes += extra_notes or []
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"d": d, "m": m, "factored_primes": list(f.primes)},
        "signature": _signature_dict(sig),
        "generators": None
        if gf is None
        else [
            {"kind": g.kind, "coords": list(g.coords), "display": g.display()}
            for g in gf.generators
        ],
        "expected_rank": None if gf is None else gf.expected_rank,
        "field_description": None
        if gf is None
        else field_description(m, abs(d), gf.generators),
        "verification": None if report is None else _report_dict(report),
        "notes": notes,
    }


def error_document(d: int | None, m: int | None, err: GenusFieldError) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "error": {
            "code": type(err).__name__,
            "message": str(err),
            "exit_code": err.exit_code,
            "d": d,
            "m": m,
        },
    }


def render_json(obj: dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict[str, Any]) -> str:
    lines = [f"schema_version: {doc['schema_version']}"]
    if "error" in doc:
        e = doc["error"]
        lines.append(f"error[{e['code']}]: {e['message']} (exit {e['exit_code']}, d={e['d']}, m={e['m']})")
        return "\n".join(lines) + "\n"
    inp, sig = doc["input"], doc["signature"]
    primes = " ".join(str(p) for p in inp["factored_primes"])
    lines.append(f"d: {inp['d']}   m: {inp['m']}   primes: {primes}")
    signs = " ".join(f"{v:+d}" for v in sig["quartic_signs"]) or "-"
    lines.append(
        f"signature: r={sig['r']} s={sig['s']} t={sig['t']} n={sig['n']}   "
        f"case: {sig['case_id']}   branch: {sig['sub_branch'] or '-'}   "
        f"quartic_signs: {signs}"
    )
    if doc["generators"] is not None:
        lines.append(f"expected_rank: {doc['expected_rank']}")
        if doc["generators"]:
            lines.append("generators:")
            for g in doc["generators"]:
                coords = ",".join(str(c) for c in g["coords"])
                lines.append(f"  {g['display']}   [{g['kind']}({coords})]")
        else:
            lines.append("generators: (none)")
        lines.append(f"field: {doc['field_description']}")
    if doc["verification"] is not None:
        v = doc["verification"]
        lines.append(
            f"verification: overall={str(v['overall']).lower()} "
            f"independence={str(v['independence_ok']).lower()} "
            f"count_matches_rank={str(v['count_matches_rank']).lower()}"
        )
        for c in v["generators"]:
            lines.append(
                f"  {c['display']}: norm_ok={str(c['norm_ok']).lower()} "
                f"ideal_square_ok={str(c['ideal_square_ok']).lower()} "
                f"square_mod4_ok={str(c['square_mod4_ok']).lower()}"
            )
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _emit(obj: dict[str, Any], fmt: str, out: TextIO) -> None:
    out.write(render_json(obj) if fmt == "json" else render_text(obj))


# ---------------------------------------------------------------- pipeline


def _prepare(d: int, primes: list[int] | None, config: SolverConfig) -> tuple[Factorization, CaseSignature]:
    if d == 0 or abs(d) == 1:
        raise Degenerate(f"d = {d} is degenerate: no quadratic part")
    if abs(d) == 2:
        raise Degenerate("d = +-2 collapses: sqrt(2) already lies in the base field")
    if primes is not None:
        f = factorization_from_primes(d, primes)
    else:
        f = factor_squarefree(d, trial_bound=config.trial_division_bound)
    return f, make_signature(f)


def evaluate(
    d: int,
    m: int,
    config: SolverConfig,
    primes: list[int] | None = None,
    with_verification: bool = False,
    classify_only: bool = False,
) -> tuple[dict[str, Any], int]:
    """Document plus exit code for one d; raises GenusFieldError for bad input."""
    f, sig = _prepare(d, primes, config)
    if not sig.covered:
        err = NotCoveredError(sig.r, sig.s, sig.t)
        doc = make_document(d, m, f, sig, None, None, extra_notes=[str(err)])
        return doc, err.exit_code
    if classify_only:
        return make_document(d, m, f, sig, None, None), 0
    gf = lift_to_level(build_generators(sig, f, config), m)
    report = full_report(gf, f) if with_verification else None
    doc = make_document(d, m, f, sig, gf, report)
    code = 0
    if report is not None and not report.overall:
        code = 1
    return doc, code


# ---------------------------------------------------------------- commands


def _run_single(args: argparse.Namespace, config: SolverConfig, out: TextIO, **kwargs) -> int:
    try:
        doc, code = evaluate(args.d, args.m, config, primes=args.primes, **kwargs)
    except GenusFieldError as err:
        _emit(error_document(args.d, args.m, err), args.format, out)
        return err.exit_code
    except ValueError as err:
        wrapped = GenusFieldError(str(err))
        _emit(error_document(args.d, args.m, wrapped), args.format, out)
        return 1
    _emit(doc, args.format, out)
    return code


def cmd_compute(args: argparse.Namespace, config: SolverConfig, out: TextIO) -> int:
    return _run_single(args, config, out, with_verification=args.verify)


def cmd_classify(args: argparse.Namespace, config: SolverConfig, out: TextIO) -> int:
    return _run_single(args, config, out, classify_only=True)


def cmd_verify(args: argparse.Namespace, config: SolverConfig, out: TextIO) -> int:
    return _run_single(args, config, out, with_verification=True)


def _batch_entry(task: tuple[int, int, bool, SolverConfig]) -> dict[str, Any]:
    d, m, with_verification, config = task
    try:
        doc, code = evaluate(d, m, config, with_verification=with_verification)
        return {"d": d, "document": doc, "code": code}
    except ValueError as exc:
        err: GenusFieldError = GenusFieldError(str(exc))
    except GenusFieldError as exc:
        err = exc
    return {
        "d": d,
        "document": error_document(d, m, err),
        "code": err.exit_code,
        "error": {"code": type(err).__name__, "message": str(err)},
    }


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise SystemExit(f"bad --range {text!r}; expected A:B") from exc


def cmd_batch(args: argparse.Namespace, config: SolverConfig, out: TextIO) -> int:
    lo, hi = _parse_range(args.range)
    tasks = [(d, args.m, args.verify, config) for d in range(lo, hi + 1)]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            entries = list(pool.map(_batch_entry, tasks, chunksize=64))
    else:
        entries = [_batch_entry(t) for t in tasks]

    by_case: dict[str, int] = {}
    errors = []
    documents = []
    verified = passed = 0
    for e in entries:
        doc = e["document"]
        if "error" in e:
            errors.append({"d": e["d"], "code": e["error"]["code"]})
            if not args.only_supported:
                documents.append(doc)
            continue
        case = doc["signature"]["case_id"]
        by_case[str(case)] = by_case.get(str(case), 0) + 1
        documents.append(doc)
        if doc["verification"] is not None:
            verified += 1
            passed += int(doc["verification"]["overall"])
    summary = {
        "range": [lo, hi],
        "m": args.m,
        "total": max(hi - lo + 1, 0),
        "constructed": sum(1 for d in documents if d.get("generators") is not None),
        "not_covered": by_case.get("NotCovered", 0),
        "by_case": by_case,
        "errors": errors,
        "verification": {"checked": verified, "passed": passed} if args.verify else None,
    }
    if args.format == "json":
        _emit({"schema_version": SCHEMA_VERSION, "documents": documents, "summary": summary}, "json", out)
    else:
        for doc in documents:
            out.write(render_text(doc))
            out.write("\n")
        out.write(f"summary: range {lo}:{hi}  m={args.m}  total={summary['total']}\n")
        out.write(f"constructed: {summary['constructed']}   not_covered: {summary['not_covered']}\n")
        cases = " ".join(f"{k}:{v}" for k, v in sorted(by_case.items(), key=lambda kv: kv[0]))
        out.write(f"by_case: {cases or '-'}\n")
        if errors:
            out.write("errors: " + " ".join(f"{e['d']}({e['code']})" for e in errors) + "\n")
        if summary["verification"] is not None:
            v = summary["verification"]
            out.write(f"verification: {v['passed']}/{v['checked']} passed\n")
    return 0


# ---------------------------------------------------------------- wiring


def _parse_primes(text: str) -> list[int]:
    return [int(p) for p in text.split(",") if p]


def _load_config(args: argparse.Namespace) -> SolverConfig:
    values = {
        "trial_division_bound": DEFAULT_CONFIG.trial_division_bound,
        "exhaustive_cutoff": DEFAULT_CONFIG.exhaustive_cutoff,
        "pell_multiplier": DEFAULT_CONFIG.pell_multiplier,
    }
    if args.config:
        with open(args.config) as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(values)
        if unknown:
            raise SystemExit(f"unknown config keys: {sorted(unknown)}")
        values.update(loaded)
    for key in values:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return SolverConfig(**values)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusfield",
        description="Construct and verify genus fields of Q(zeta_{2^m}, sqrt(d)).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=3, help="cyclotomic level, m >= 3")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to a file instead of stdout")
    common.add_argument("--config", help="JSON config file with solver bounds")
    common.add_argument("--trial-division-bound", dest="trial_division_bound", type=int)
    common.add_argument("--exhaustive-cutoff", dest="exhaustive_cutoff", type=int)
    common.add_argument("--pell-multiplier", dest="pell_multiplier", type=int)

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--d", type=int, required=True, help="square-free integer")
    single.add_argument(
        "--primes",
        type=_parse_primes,
        help="comma-separated pre-verified factorization of |d|",
    )

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compute", parents=[common, single], help="construct the genus field")
    p.add_argument("--verify", action="store_true", help="attach a verification report")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=[common, single], help="classification only")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common, single], help="construct and verify")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", parents=[common], help="scan a range of d values")
    p.add_argument("--range", required=True, help="inclusive range A:B")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--only-supported", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.m < 3:
        sys.stderr.write("m must be >= 3\n")
        return 1
    config = _load_config(args)
    if args.out:
        with open(args.out, "w") as out:
            return args.func(args, config, out)
    return args.func(args, config, sys.stdout)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
