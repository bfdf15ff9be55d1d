"""Command-line front end: parse shape expressions, evaluate them exactly,
numerically or in closed form, run named verification suites, and check the
conjectured gluing ratios.

Exit codes: 0 all Pass, 1 any Fail, 2 only Inconclusive besides Passes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass

from . import closed_forms as cf
from . import exact_engine as ee
from . import numerics as nm
from . import suites
from .reporting import FAIL, INCONCLUSIVE, PASS, IdentityReport
from .shapes import (FamilySpec, SkewShape, SmzvError, Tableau, make_family)


class ParseError(SmzvError, ValueError):
    """Malformed shape expression; the message carries the position."""


class UnknownFamily(SmzvError, ValueError):
    """The closed-form evaluator needs a recognized shape family."""


class UnknownSuite(SmzvError, KeyError):
    """No verification suite of that name."""


@dataclass
class Config:
    digits: int = 50
    m_exact: int | None = None     # suites fall back to their own defaults
    m_num: int = 100_000
    state_budget: int = 2_000_000
    fmt: str = "text"
    seed: int = 20240
    gluing_pairs: int = 50
    jt_max_cells: int = 9

    def __post_init__(self):
        if self.digits < 15:
            raise ValueError("precision must be at least 15 digits")
        if self.m_exact is not None and self.m_exact < 2:
            raise ValueError("exact cutoff must be at least 2")
        if self.m_num < (self.m_exact or 2):
            raise ValueError("numeric cutoff must be at least the exact cutoff")


@dataclass
class ParsedExpr:
    tableau: Tableau
    family: FamilySpec | None = None


_FAMILY_RE = re.compile(r"^(A|B|L|L\*|S|S\*)\((\d+)\)$")
_HOOKLIKE_RE = re.compile(r"^(hook|antihook|square)\(([\d,\s]+)\)$")
_STAIR_RE = re.compile(r"^stair\((\d+)(?:;([\d,\s]*))?\)$")
_PAIR_RE = re.compile(r"^\(([\d,\s]+)\)(?:/\(([\d,\s]+)\))?$")
_CHECKER_RE = re.compile(r"^checker\((\d+),\s*(\d+)\)$")


def _ints(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_shape_expr(text: str) -> ParsedExpr:
    """Parse a shape expression with an optional fill.

    Forms: "(5,4,3)/(3,1) checker(1,3)", "A(3) checker(1,3)",
    "stair(5;2,2,1) checker(1,3)", "hook(4,3) checker(2,3)",
    "[[_,_,1],[1,3]]".  The fill defaults to checker(1,3).
    """
    text = text.strip()
    if not text:
        raise ParseError("empty shape expression")
    if text.startswith("[["):
        return ParsedExpr(_parse_rows(text))
    parts = text.split()
    shape_txt = parts[0]
    fill = (1, 3)
    if len(parts) == 2:
        m = _CHECKER_RE.match(parts[1])
        if not m:
            raise ParseError(f"bad fill {parts[1]!r} at position {len(shape_txt) + 1} "
                             "(expected checker(a,b))")
        fill = (int(m.group(1)), int(m.group(2)))
    elif len(parts) > 2:
        raise ParseError(f"too many tokens in {text!r}")

    m = _FAMILY_RE.match(shape_txt)
    if m:
        kind = {"A": "A", "B": "B", "L": "L", "L*": "Lstar",
                "S": "S", "S*": "Sstar"}[m.group(1)]
        spec = FamilySpec(kind, (int(m.group(2)),), fill)
        return ParsedExpr(make_family(spec), spec)
    m = _HOOKLIKE_RE.match(shape_txt)
    if m:
        args = _ints(m.group(2))
        want = 1 if m.group(1) == "square" else 2
        if len(args) != want:
            raise ParseError(f"{m.group(1)} takes {want} argument(s), got {args}")
        spec = FamilySpec(m.group(1), args, fill)
        return ParsedExpr(make_family(spec), spec)
    m = _STAIR_RE.match(shape_txt)
    if m:
        mu = _ints(m.group(2)) if m.group(2) else ()
        spec = FamilySpec("stair", (int(m.group(1)), mu), fill)
        return ParsedExpr(make_family(spec), spec)
    m = _PAIR_RE.match(shape_txt)
    if m:
        outer = _ints(m.group(1))
        inner = _ints(m.group(2)) if m.group(2) else ()
        from .shapes import checkerboard_fill
        return ParsedExpr(checkerboard_fill(SkewShape(outer, inner), *fill))
    raise ParseError(f"cannot parse shape {shape_txt!r} at position 0")


def _parse_rows(text: str) -> Tableau:
    try:
        rows = json.loads(text.replace("_", "null"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad row list: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("row list must be a list of lists")
    entries = {}
    for i, row in enumerate(rows, start=1):
        seen_entry = False
        for j, v in enumerate(row, start=1):
            if v is None:
                if seen_entry:
                    raise ParseError(f"hole after an entry in row {i}")
                continue
            if not isinstance(v, int) or v < 1:
                raise ParseError(f"entry at row {i}, column {j} must be a positive integer")
            seen_entry = True
            entries[(i, j)] = v
    if not entries:
        raise ParseError("row list has no entries")
    return Tableau(SkewShape.from_cells(entries.keys()), entries)


def serialize(t: Tableau) -> str:
    """Canonical literal form with '_' for skew holes."""
    rows = []
    for i in range(1, t.shape.height + 1):
        lo, hi = t.shape.row_span(i)
        rows.append("[" + ",".join(["_"] * (lo - 1)
                                   + [str(t.entries[(i, j)]) for j in range(lo, hi + 1)]) + "]")
    return "[" + ",".join(rows) + "]"


_CLOSED_13 = {"A": "A", "B": "B", "L": "L", "Lstar": "Lstar", "S": "S", "Sstar": "Sstar"}


def closed_form(parsed: ParsedExpr) -> cf.ZetaExpr:
    """Closed-form expression for a recognized family instance."""
    spec = parsed.family
    if spec is None:
        raise UnknownFamily("closed evaluation needs a family form "
                            "(A/B/L/L*/S/S*, stair, hook, antihook, square(2))")
    a, b = spec.fill
    if spec.kind in _CLOSED_13:
        n = spec.args[0]
        if (a, b) == (1, 3):
            if spec.kind in ("S", "Sstar") and n == 0:
                return cf.ZetaExpr.const(1)
            return cf.primitive_13(_CLOSED_13[spec.kind], n)
        if (a, b) == (1, 2) and spec.kind == "A":
            return cf.special_values(f"A12({n})")
        if (a, b) == (1, 2) and spec.kind == "S":
            return cf.special_values(f"S12({n})")
        raise UnknownFamily(f"no closed form for {spec.kind} at fill ({a},{b})")
    if spec.kind == "stair":
        N, mu = spec.args
        bctx = "closed13" if (a, b) == (1, 3) else "abstract"
        return cf.stair_eval(N, mu, a, b, bctx=bctx)
    if spec.kind == "hook":
        return cf.hook_eval_shape(a, b, *spec.args)
    if spec.kind == "antihook":
        return cf.antihook_eval_shape(a, b, *spec.args)
    if spec.kind == "square" and spec.args == (2,) and (a, b) == (1, 3):
        return cf.special_values("square2x2_13")
    raise UnknownFamily(f"no closed form for {spec.kind}{spec.args} at fill ({a},{b})")


def cmd_eval(args, cfg: Config) -> tuple[int, list[dict]]:
    parsed = parse_shape_expr(args.expr)
    t = parsed.tableau
    rows = [{"item": f"eval {args.expr}", "shape": serialize(t) if not t.is_empty else "[]",
             "method": args.method}]
    if args.method == "exact":
        M = cfg.m_exact or 12
        rows[0]["cutoff"] = M
        rows[0]["value"] = str(ee.trunc_smzv(t, M, cfg.state_budget))
    elif args.method == "numeric":
        est = nm.smzv_numeric(t, cfg.m_num, cfg.digits)
        rows[0]["cutoff"] = cfg.m_num
        rows[0]["value"] = est.value.str_digits(cfg.digits)
        rows[0]["error_bound"] = est.error_bound.str_digits(5)
    elif args.method == "closed":
        expr = closed_form(parsed)
        rows[0]["value"] = repr(expr)
        try:
            rows[0]["numeric"] = expr.eval_hp(cfg.digits).str_digits(cfg.digits)
        except cf.MissingContext:
            rows[0]["numeric"] = "(symbolic; no numeric context)"
    else:
        raise ValueError(f"unknown method {args.method!r}")
    return 0, rows


def _status_exit(reports) -> int:
    if any(r.status == FAIL for r in reports):
        return 1
    if any(r.status == INCONCLUSIVE for r in reports):
        return 2
    return 0


def cmd_verify(args, cfg: Config) -> tuple[int, list[dict]]:
    name = args.suite
    if name not in suites.SUITES and name != "all":
        raise UnknownSuite(f"unknown suite {name!r}; choose from "
                           f"{', '.join(sorted(suites.SUITES))} or 'all'")
    names = sorted(suites.SUITES) if name == "all" else [name]
    reports: list[IdentityReport] = []
    for n in names:
        reports.extend(suites.run_suite(n, cfg))
    reports.sort(key=lambda r: (r.suite, r.item))
    return _status_exit(reports), [r.as_dict() for r in reports]


def cmd_conjecture(args, cfg: Config) -> tuple[int, list[dict]]:
    rep = cf.conjecture_residual(args.case, cfg.m_num, cfg.digits).as_report()
    code = 0 if rep.status == PASS else (2 if rep.status == INCONCLUSIVE else 1)
    return code, [rep.as_dict()]


def cmd_report(args, cfg: Config) -> tuple[int, list[dict]]:
    names = ["thm34", "thm35", "cor36", "hooks", "antihooks", "stairs",
             "hankel13", "specials", "conjecture", "mzv-relation"]
    reports: list[IdentityReport] = []
    for n in names:
        reports.extend(suites.run_suite(n, cfg))
    reports.sort(key=lambda r: (r.suite, r.item))
    return _status_exit(reports), [r.as_dict() for r in reports]


def _emit(rows: list[dict], cfg: Config, out_path: str | None):
    if cfg.fmt == "json":
        text = json.dumps(rows, indent=2, sort_keys=True)
    elif cfg.fmt == "csv":
        keys = sorted({k for r in rows for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys)
        w.writeheader()
        for r in rows:
            w.writerow(r)
        text = buf.getvalue()
    else:
        widths = {}
        keys = []
        for r in rows:
            for k in r:
                if k not in widths:
                    keys.append(k)
                widths[k] = max(widths.get(k, len(k)), len(str(r.get(k, ""))))
        lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
        for r in rows:
            lines.append("  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys))
        text = "\n".join(lines)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--digits", type=int, default=None, help="working precision in digits")
    shared.add_argument("--cutoff", type=int, default=None, help="exact truncation cutoff")
    shared.add_argument("--numeric-cutoff", type=int, default=None, help="numeric cutoff")
    shared.add_argument("--json", action="store_true", help="emit JSON")
    shared.add_argument("--csv", action="store_true", help="emit CSV")
    shared.add_argument("--out", default=None, help="write output to a file")

    p = argparse.ArgumentParser(prog="smzv", parents=[shared],
                                description="Checkerboard Schur multiple zeta values: "
                                            "evaluation and identity verification")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", parents=[shared], help="evaluate one shape expression")
    pe.add_argument("expr")
    pe.add_argument("--method", choices=("exact", "numeric", "closed"), default="exact")

    pv = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    pv.add_argument("suite", nargs="?", default=None)
    pv.add_argument("--suite", dest="suite_flag", default=None)

    pc = sub.add_parser("conjecture", parents=[shared],
                        help="check a conjectured gluing ratio")
    pc.add_argument("case", choices=sorted(cf.CONJECTURE_CASES))

    pr = sub.add_parser("report", parents=[shared],
                        help="reproduce the worked example values")
    pr.add_argument("--all", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    digits = args.digits or int(os.environ.get("SMZV_PRECISION", 50))
    cutoff = args.cutoff
    if cutoff is None and os.environ.get("SMZV_CUTOFF"):
        cutoff = int(os.environ["SMZV_CUTOFF"])
    cfg = Config(digits=digits, m_exact=cutoff,
                 m_num=args.numeric_cutoff or 100_000,
                 fmt="json" if args.json else ("csv" if args.csv else "text"))
    try:
        if args.command == "eval":
            code, rows = cmd_eval(args, cfg)
        elif args.command == "verify":
            args.suite = args.suite_flag or args.suite
            if not args.suite:
                raise UnknownSuite("verify needs a suite name (or --suite NAME)")
            code, rows = cmd_verify(args, cfg)
        elif args.command == "conjecture":
            code, rows = cmd_conjecture(args, cfg)
        else:
            code, rows = cmd_report(args, cfg)
    except SmzvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(rows, cfg, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
