"""Command-line front end: classification, census, families, widths, sporadic data.

All output pipelines are deterministic: identical inputs and flags produce
byte-identical output.  Exit codes: 0 success, 2 usage or invalid input,
3 resource budget exceeded, 4 data integrity failure.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

from . import families, projections, sporadic
from .classifier import classify, is_terminal_fast
from .exactgeom import (
    GeneratingPoint,
    OracleCapExceeded,
    ShrunkSimplex,
    WeightVector,
    brute_force_lattice_points,
    lattice_points_in_shrunk_simplex,
)
from .search import BudgetExceeded, CensusQuery, enumerate_blowups, run_census

DATASET_ENV = "BLOWUPS_SPORADIC_DATA"

_EPSILON_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


def parse_epsilon(text: str) -> Fraction:
    """Exact fractions only: 'p/q' or an integer; decimals are rejected."""
    m = _EPSILON_RE.match(text.strip())
    if not m:
        raise ValueError(f"epsilon must be an integer or p/q fraction, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError("epsilon denominator is zero")
    eps = Fraction(num, den)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    return eps


def parse_weights(text: str) -> WeightVector:
    try:
        values = tuple(int(f) for f in text.split(","))
    except ValueError:
        raise ValueError(f"weights must be comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise ValueError(f"weights must be positive, got {values}")
    return WeightVector(values)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _witness_json(w) -> dict:
    return {
        "k": w.k,
        "z": list(w.z),
        "point": [str(c) for c in w.point],
        "class": w.membership.value,
    }


def cmd_classify(args) -> int:
    weights = parse_weights(args.weights)
    eps = parse_epsilon(args.epsilon)
    verdict = classify(weights, eps)
    payload = {
        "weights": list(weights.n),
        "V": weights.V,
        "epsilon": str(eps),
        "eps_log_terminal": verdict.eps_log_terminal,
        "eps_log_canonical": verdict.eps_log_canonical,
        "witness": _witness_json(verdict.witness) if verdict.witness else None,
    }
    _emit(_json(payload), args.out)
    return 0


def _census_csv(result) -> str:
    lines = ["n_min,count"]
    lines += [f"{k},{c}" for k, c in result.histogram.items()]
    lines.append("")
    hits = result.hits
    d = len(hits[0].weights) if hits else 0
    lines.append("V," + ",".join(f"n_{i + 1}" for i in range(d)) + ",n_min")
    lines += [
        f"{h.V}," + ",".join(map(str, h.weights)) + f",{h.n_min}" for h in hits
    ]
    return "\n".join(lines) + "\n"


def cmd_census(args) -> int:
    query = CensusQuery(
        d=args.dim,
        v_min=args.vmin,
        v_max=args.vmax,
        eps=parse_epsilon(args.epsilon),
        verdict=args.verdict,
        min_weight=args.min_weight,
        budget=args.budget,
    )
    result = run_census(query, workers=args.threads)
    if args.format == "csv":
        _emit(_census_csv(result), args.out)
        return 0
    payload = {
        "dim": query.d,
        "v_min": query.v_min,
        "v_max": query.v_max,
        "epsilon": str(query.eps),
        "verdict": query.verdict,
        "min_weight": query.min_weight,
        "histogram": {str(k): c for k, c in result.histogram.items()},
        "total": result.histogram.total,
        "hits": [
            {"V": h.V, "weights": list(h.weights), "n_min": h.n_min}
            for h in result.hits
        ],
    }
    _emit(_json(payload), args.out)
    return 0


def cmd_family(args) -> int:
    sign = -1 if args.sign == "-" else 1
    if args.volume is None:
        bound = families.bound_dim1(args.id, args.apex, sign=sign)
        _emit(_json({"id": args.id, "apex": args.apex, "bound": str(bound)}), args.out)
        return 0
    weights = families.blowup_from_quintuple(args.id, args.apex, args.volume, sign)
    payload = {
        "id": args.id,
        "apex": args.apex,
        "V": args.volume,
        "sign": args.sign,
        "weights": list(weights.n) if weights else None,
    }
    if weights is not None:
        payload["eps_log_terminal"] = is_terminal_fast(weights)
        payload["n_min"] = weights.n_min
    _emit(_json(payload), args.out)
    return 0


def cmd_family_table(args) -> int:
    _emit(families.table_csv(), args.out)
    return 0


def scan_families(v_max: int) -> dict:
    """Run the blowup recipe over every row, sign, apex and index up to v_max."""
    produced = 0
    terminal = 0
    worst = 0
    violations = []
    for q in families.quintuple_table():
        for sign in families.sign_choices(q):
            for V in range(1, v_max + 1):
                try:
                    families.instantiate(q.label, V, sign)
                except families.DivisibilityError:
                    continue
                for apex in families.APICES:
                    w = families.blowup_from_quintuple(q.label, apex, V, sign)
                    if w is None:
                        continue
                    produced += 1
                    if is_terminal_fast(w):
                        terminal += 1
                        worst = max(worst, w.n_min)
                        if w.n_min > 6:
                            violations.append(
                                {
                                    "id": q.label,
                                    "apex": apex,
                                    "V": V,
                                    "sign": "+" if sign == 1 else "-",
                                    "weights": list(w.n),
                                    "n_min": w.n_min,
                                }
                            )
    return {
        "v_max": v_max,
        "blowups": produced,
        "terminal": terminal,
        "max_terminal_n_min": worst,
        "violations": violations,
    }


def cmd_family_scan(args) -> int:
    payload = scan_families(args.vmax)
    _emit(_json(payload), args.out)
    return 0 if not payload["violations"] else 1


def cmd_width(args) -> int:
    try:
        raw = json.loads(args.points)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--points is not valid JSON: {exc}")
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and all(isinstance(c, int) for c in p) for p in raw
    ):
        raise ValueError("--points must be a JSON array of integer arrays")
    cfg = projections.ProjectedConfig(
        tuple(tuple(p) for p in raw), args.origin_index
    )
    facet_list = projections.facets(cfg)
    widths = [projections.facet_width(cfg, f) for f in facet_list]
    payload = {
        "points": [list(p) for p in cfg.points],
        "origin_index": cfg.origin_index,
        "facets": [
            {
                "normal": list(f.normal),
                "offset": f.offset,
                "incident": list(f.incident),
                "width": w,
            }
            for f, w in zip(facet_list, widths)
        ],
        "max_facet_width": max(widths),
        "ell_L": str(projections.ell_L(cfg)),
    }
    _emit(_json(payload), args.out)
    return 0


def cmd_sporadic(args) -> int:
    path = args.input or os.environ.get(DATASET_ENV)
    if path and not args.fixtures:
        records = sporadic.parse_dataset(path, strict=args.strict)
        source = str(path)
    else:
        records = list(sporadic.EMBEDDED_RECORDS)
        source = "embedded-fixtures"
    report = sporadic.sporadic_report(records)
    report["source"] = source
    if args.format == "csv":
        lines = ["n_min,count"]
        lines += [f"{k},{c}" for k, c in sorted(
            (int(k), c) for k, c in report["histogram"].items()
        )]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    _emit(_json(report), args.out)
    return 0


def _selftest_checks():
    # Dimension-3 exhaustive check against the (1, a, b) normal form.
    def kawakita_small() -> bool:
        for V in range(1, 51):
            found = {
                w.n for w in enumerate_blowups(3, V) if is_terminal_fast(w)
            }
            expected = {
                tuple(sorted((1, a, V - a)))
                for a in range(1, V)
                if gcd(a, V - a) == 1
            }
            if found != expected:
                return False
        return True

    # Coset enumeration against the brute-force original-coordinates scan.
    def oracle_equivalence() -> bool:
        for d in (2, 3):
            for V in range(1, 21):
                for w in enumerate_blowups(d, V):
                    for eps in (Fraction(1), Fraction(1, 2)):
                        simplex = ShrunkSimplex(GeneratingPoint(w), eps)
                        coset = sorted(
                            x.membership.value
                            for x in lattice_points_in_shrunk_simplex(simplex)
                        )
                        brute = sorted(
                            c.value for _, c in brute_force_lattice_points(w, eps)
                        )
                        if coset != brute:
                            return False
        return True

    def fixtures() -> bool:
        for r in sporadic.EMBEDDED_RECORDS:
            blowups = sporadic.blowups_from_record(r)
            if not blowups:
                return False
            for _, w in blowups:
                if not classify(w, 1).eps_log_terminal:
                    return False
                back = sporadic.record_from_weights(w)
                recovered = dict(sporadic.blowups_from_record(back))
                if recovered.get(5) != w:
                    return False
        return True

    def table() -> bool:
        rows = families.quintuple_table()
        if len(rows) != 46 or any(sum(q.base) != 0 for q in rows):
            return False
        flagged = {q.label for q in rows if not families.check_ratio_lemma(q.label)}
        return len(flagged) == 18 and "Q29" in flagged and "N5" in flagged

    return [
        ("kawakita-form census V<=50", kawakita_small),
        ("coset/brute-force agreement V<=20", oracle_equivalence),
        ("sporadic fixtures", fixtures),
        ("quintuple table integrity", table),
    ]


def cmd_selftest(args) -> int:
    failures = 0
    for name, check in _selftest_checks():
        ok = check()
        print(("ok   " if ok else "FAIL ") + name)
        if not ok:
            failures += 1
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowups",
        description="Exact classification of weighted blowups of affine space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one weight vector")
    p.add_argument("--weights", required=True, help="comma-separated positive integers")
    p.add_argument("--epsilon", default="1", help="rational in (0,1], e.g. 1 or 1/2")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="exhaustive census over an index range")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vmax", type=int, required=True)
    p.add_argument("--vmin", type=int, default=1)
    p.add_argument("--epsilon", default="1")
    p.add_argument("--verdict", default="terminal",
                   choices=["terminal", "canonical", "eps-lt", "eps-lc"])
    p.add_argument("--min-weight", type=int, default=None)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("family", help="instantiate one family row (or query its bound)")
    p.add_argument("--id", required=True)
    p.add_argument("--apex", type=int, required=True)
    p.add_argument("--volume", type=int, default=None)
    p.add_argument("--sign", default="+", choices=["+", "-"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("family-table", help="audit CSV of the 46 family rows")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family_table)

    p = sub.add_parser("family-scan", help="scan all rows/apices/signs up to an index")
    p.add_argument("--vmax", type=int, default=300)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family_scan)

    p = sub.add_parser("width", help="facet widths of a projected configuration")
    p.add_argument("--points", required=True, help="JSON array of integer points")
    p.add_argument("--origin-index", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("sporadic", help="blowup histogram of a sporadic-simplex dataset")
    p.add_argument("--input", default=None,
                   help=f"dataset file (default: ${DATASET_ENV} or embedded fixtures)")
    p.add_argument("--fixtures", action="store_true",
                   help="force the embedded fixture records")
    p.add_argument("--strict", action="store_true", help="strict dataset parsing")
    p.add_argument("--histogram", action="store_true",
                   help="accepted for compatibility; the histogram is always computed")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_sporadic)

    p = sub.add_parser("selftest", help="run the embedded fixture suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (sporadic.DatasetFormatError, sporadic.DatasetIntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (BudgetExceeded, OracleCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
