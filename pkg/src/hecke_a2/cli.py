"""Command-line front end.

    hecke-a2 classify  ELEMENT [--mode M | --group G]
    hecke-a2 classpoly ELEMENT [--mode M | --group G]
    hecke-a2 adlv      ELEMENT [--group G] [--b B] [--newton-bound N]
    hecke-a2 points    ELEMENT --b B --q Q [--group G]
    hecke-a2 ghkr      ELEMENT --b B [--group G] [--margin M]
    hecke-a2 leading   M,N
    hecke-a2 verify    SUITE [--max-length N]
    hecke-a2 sweep     [--mode M | --group G [--b B]] [--max-length N]
    hecke-a2 cache     {info,warm,clear} [--max-length N]

Exit status: 0 on success, 1 on usage or input errors, 2 when a
verification suite reports failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .adlv import (
    DEFAULT_GHKR_MARGIN,
    AdlvError,
    adlv,
    adlv_record,
    basic_class,
    ghkr_check,
    ghkr_threshold,
    group_context,
    leading_table,
    rational_points,
    sigma_class,
    sigma_classes,
)
from .conj import Mode, classify, invariant, mode_for
from .engine import CacheFormatError, Engine
from .group import elements_up_to, format_element, length, parse_element
from .verify import SUITES, run_suite

FORMATS = ("text", "json", "csv")
CACHE_ENV = "HECKE_CACHE"

# flags each subcommand accepts beyond --format/--cache-file/--seed
_ALLOWED = {
    "classify": {"mode", "group"},
    "classpoly": {"mode", "group"},
    "adlv": {"group", "b", "newton_bound"},
    "points": {"group", "b", "q"},
    "ghkr": {"group", "b", "margin"},
    "leading": {"group"},
    "verify": {"max_length", "margin"},
    "sweep": {"mode", "group", "b", "max_length"},
    "cache": {"max_length"},
}
_OPTIONAL = ("mode", "group", "b", "q", "margin", "max_length", "newton_bound")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Output:
    data: Any
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    text: str = ""
    status: int = 0

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue()
        return self.text + ("\n" if self.text else "")


# ------------------------------------------------------------- argument helpers

def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _element(text: str):
    try:
        return parse_element(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _mode(args, a=None) -> Mode:
    if args.mode is not None and args.group is not None:
        raise UsageError("give either --mode or --group, not both")
    if args.mode is not None:
        try:
            mode = Mode.parse(args.mode)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.group is not None:
        twisted = _group(args).twisted
        if a is None:
            return Mode.TWISTED if twisted else Mode.SPLIT
        mode = mode_for(a, twisted)
    else:
        return mode_for(a) if a is not None else Mode.SPLIT
    if a is not None and mode.coset is not None and a.kappa != mode.coset:
        raise UsageError(f"{format_element(a)} lies in the tau^{a.kappa} coset, "
                         f"not in mode {mode.value}")
    return mode


def _group(args):
    try:
        return group_context(args.group or "pgl3")
    except AdlvError as exc:
        raise UsageError(str(exc)) from None


def _sigma(group, text: str | None):
    if text is None:
        raise UsageError("--b is required")
    aliases = {"1": 0, "basic": 0, "tau": 1, "tau1": 1, "tau2": 2}
    key = text.strip().lower()
    try:
        if key in aliases:
            if group.twisted and aliases[key]:
                raise UsageError(f"{group} has a single basic class")
            return basic_class(group, aliases[key])
        return sigma_class(group, text)
    except (AdlvError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _poly_text(poly) -> str:
    return "\n".join(f"{c}: {f!r}" for c, f in poly.items()) or "0"


def _poly_cell(poly) -> str:
    return json.dumps(poly.to_json(), separators=(",", ":"))


# ------------------------------------------------------------- subcommands

def cmd_classify(args, engine) -> Output:
    a = _element(args.element)
    mode = _mode(args, a)
    c = classify(a, mode)
    inv = invariant(a, mode)
    rec = {
        "element": format_element(a),
        "mode": mode.value,
        "class": str(c),
        "length": length(a),
        "newton": [_frac(x) for x in inv.newton],
        "kappa": inv.kappa,
    }
    row = [rec["element"], rec["mode"], rec["class"], rec["length"],
           " ".join(rec["newton"]), "" if inv.kappa is None else inv.kappa]
    return Output(rec, ["element", "mode", "class", "length", "newton", "kappa"], [row], str(c))


def cmd_classpoly(args, engine) -> Output:
    a = _element(args.element)
    mode = _mode(args, a)
    poly = engine.class_polynomial(a, mode)
    data = poly.to_json()
    rows = [[c, " ".join(map(str, v))] for c, v in data.items()]
    return Output(data, ["class", "coefficients"], rows, _poly_text(poly))


def _adlv_rows(records):
    header = ["group", "element", "b", "nonempty", "dim", "witness_class", "degree"]
    rows = [["" if r[k] is None else r[k] for k in header] for r in records]
    return header, rows


def _adlv_text(r) -> str:
    if not r["nonempty"]:
        return f"{r['b']}: empty"
    return f"{r['b']}: dim {r['dim']} (witness {r['witness_class']}, degree {r['degree']})"


def cmd_adlv(args, engine) -> Output:
    group = _group(args)
    w = _element(args.element)
    if args.b is not None:
        records = [adlv_record(group, w, _sigma(group, args.b), engine)]
    else:
        bound = 8 if args.newton_bound is None else args.newton_bound
        if bound < 0:
            raise UsageError("--newton-bound must be non-negative")
        records = [adlv_record(group, w, b, engine) for b in sigma_classes(group, bound)]
    header, rows = _adlv_rows(records)
    data = records[0] if args.b is not None else records
    return Output(data, header, rows, "\n".join(_adlv_text(r) for r in records))


def cmd_points(args, engine) -> Output:
    group = _group(args)
    w = _element(args.element)
    b = _sigma(group, args.b)
    if args.q is None:
        raise UsageError("--q is required")
    n = rational_points(group, w, b, args.q, engine)
    rec = {"group": str(group), "element": format_element(w), "b": str(b), "q": args.q, "points": n}
    return Output(rec, list(rec), [list(rec.values())], str(n))


def cmd_ghkr(args, engine) -> Output:
    group = _group(args)
    w = _element(args.element)
    b = _sigma(group, args.b)
    margin = DEFAULT_GHKR_MARGIN if args.margin is None else args.margin
    holds = ghkr_check(group, w, b, margin, engine)
    b0 = basic_class(group, b.kappa)
    r, r0 = adlv(group, w, b, engine), adlv(group, w, b0, engine)
    rec = {
        "group": str(group),
        "element": format_element(w),
        "b": str(b),
        "basic": str(b0),
        "margin": margin,
        "threshold": _frac(ghkr_threshold(b, margin)),
        "dim": r.dim,
        "basic_dim": r0.dim,
        "defect": b.defect,
        "basic_defect": b0.defect,
        "holds": holds,
    }
    row = ["" if v is None else v for v in rec.values()]
    def show(d):
        return "empty" if d is None else d

    text = (f"{'holds' if holds else 'fails'}: dim X(b) = {show(r.dim)}, "
            f"dim X(b') = {show(r0.dim)}, defects {b.defect}/{b0.defect}")
    return Output(rec, list(rec), [row], text)


def _lambda(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected M,N for lambda, got {text!r}") from None
    return m, n


def cmd_leading(args, engine) -> Output:
    group = _group(args)
    lam = _lambda(args.lam)
    table = leading_table(lam, group, engine)
    rows = [[str(b), str(table.witnesses[b]), v, table.n0 - v] for b, v in table.items()]
    data = {
        "lambda": list(lam),
        "N0": table.n0,
        "rows": [dict(zip(("b", "witness_class", "leading", "drop"), r)) for r in rows],
    }
    text = "\n".join([f"N0 = {table.n0}"] + [f"{b}: {v} (N0 - {d})" for b, _, v, d in rows])
    return Output(data, ["b", "witness_class", "leading", "drop"], rows, text)


def cmd_verify(args, engine) -> Output:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    bound = args.max_length if args.max_length is not None else (8 if args.suite == "leading" else 12)
    if bound < 0:
        raise UsageError("--max-length must be non-negative")
    kw = {}
    if args.margin is not None:
        if args.suite != "ghkr":
            raise UsageError("--margin applies to the ghkr suite only")
        kw["margin"] = args.margin
    rep = run_suite(args.suite, bound, engine, **kw)
    rows = ([["failure", c.what, c.command] for c in rep.failures]
            + [["erratum", c.what, c.command] for c in rep.errata])
    lines = [rep.summary()]
    lines += [f"FAIL {c.what}\n  {c.command}" for c in rep.failures]
    lines += [f"erratum {c.what}\n  {c.command}" for c in rep.errata]
    data = rep.to_json()
    return Output(data, ["kind", "case", "command"],
                  [["summary", rep.summary(), ""]] + rows, "\n".join(lines),
                  status=0 if rep.ok else 2)


def cmd_sweep(args, engine) -> Output:
    bound = 6 if args.max_length is None else args.max_length
    if bound < 0:
        raise UsageError("--max-length must be non-negative")
    if args.b is not None:
        if args.mode is not None:
            raise UsageError("an ADLV sweep takes --group and --b, not --mode")
        group = _group(args)
        b = _sigma(group, args.b)
        elts = sorted(elements_up_to(bound), key=lambda a: (length(a), format_element(a)))
        records = [adlv_record(group, w, b, engine) for w in elts]
        header, rows = _adlv_rows(records)
        text = "\n".join(f"{r['element']} " + _adlv_text(r) for r in records)
        return Output(records, header, rows, text)
    mode = _mode(args)
    elts = sorted(elements_up_to(bound, coset=mode.coset), key=lambda a: (length(a), format_element(a)))
    records, rows, lines = [], [], []
    for a in elts:
        poly = engine.class_polynomial(a, mode)
        rec = {"element": format_element(a), "length": length(a),
               "class": str(classify(a, mode)), "poly": poly.to_json()}
        records.append(rec)
        rows.append([rec["element"], rec["length"], rec["class"], _poly_cell(poly)])
        lines.append(f"{rec['element']}  l={rec['length']}  {rec['class']}  {poly!r}")
    return Output(records, ["element", "length", "class", "poly"], rows, "\n".join(lines))


def cmd_cache(args, engine) -> Output:
    path = args.cache_path
    if path is None:
        raise UsageError(f"cache needs --cache-file or ${CACHE_ENV}")
    if args.action == "clear":
        existed = os.path.exists(path)
        if existed:
            os.remove(path)
        rec = {"cache": path, "action": "clear", "removed": existed}
        return Output(rec, list(rec), [list(rec.values())], f"removed {path}" if existed else "nothing to remove")
    if args.action == "warm":
        bound = 10 if args.max_length is None else args.max_length
        if bound < 0:
            raise UsageError("--max-length must be non-negative")
        for mode in Mode:
            for a in elements_up_to(bound, coset=mode.coset):
                engine.class_polynomial(a, mode)
        n = engine.save(path)
        rec = {"cache": path, "action": "warm", "max_length": bound, "entries": n}
        return Output(rec, list(rec), [list(rec.values())], f"{n} entries written to {path}")
    entries = 0
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            header = json.loads(fh.readline() or "null")
            entries = sum(1 for line in fh if line.strip())
    else:
        header = None
    version = header.get("version") if isinstance(header, dict) else None
    rec = {"cache": path, "action": "info", "exists": header is not None,
           "version": version, "entries": entries}
    text = f"{path}: {'version ' + str(version) + ', ' if header else 'missing, '}{entries} entries"
    return Output(rec, list(rec), [["" if v is None else v for v in rec.values()]], text)


COMMANDS = {
    "classify": cmd_classify,
    "classpoly": cmd_classpoly,
    "adlv": cmd_adlv,
    "points": cmd_points,
    "ghkr": cmd_ghkr,
    "leading": cmd_leading,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "cache": cmd_cache,
}


# ------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--mode", help="split, split_tau, split_tau2 or twisted")
    common.add_argument("--group", help="pgl3, gl3, u3 or d3x (default pgl3)")
    common.add_argument("--b", help="sigma-class: a straight class name, or 1, tau, tau2")
    common.add_argument("--q", type=int, help="size of the residue field")
    common.add_argument("--margin", type=int, help=f"GHKR length margin (default {DEFAULT_GHKR_MARGIN})")
    common.add_argument("--max-length", type=int, dest="max_length")
    common.add_argument("--newton-bound", type=int, dest="newton_bound",
                        help="largest <nu, 2 rho> listed by adlv without --b (default 8)")
    common.add_argument("--cache-file", dest="cache_file",
                        help=f"memo cache file (default ${CACHE_ENV})")
    common.add_argument("--seed", type=int, help="randomize the reduction order")

    p = _Parser(prog="hecke-a2", description="Class polynomials and affine Deligne-Lusztig "
                "varieties for the extended affine Weyl group of type A2.",
                epilog="Elements are written t[m,n].w.tau^k with (m,n) the alpha-coordinates "
                "of the translation part and w in e, s1, s2, s12, s21, s121.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, help_text in (
            ("classify", "conjugacy class of an element"),
            ("classpoly", "class polynomial of an element"),
            ("adlv", "emptiness and dimension of X_w(b)"),
            ("points", "rational points of X_w(b) for superbasic b"),
            ("ghkr", "compare X_w(b) with the basic locus"),
            ("leading", "leading coefficients for w0 t^lambda"),
            ("verify", "run a verification suite"),
            ("sweep", "table over all elements up to a length"),
            ("cache", "inspect, warm or clear the memo cache")):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("classify", "classpoly", "adlv", "points", "ghkr"):
            sp.add_argument("element")
        elif name == "leading":
            sp.add_argument("lam", metavar="M,N", help="dominant coweight in alpha-coordinates")
        elif name == "verify":
            sp.add_argument("suite", choices=SUITES)
        elif name == "cache":
            sp.add_argument("action", choices=("info", "warm", "clear"))
    return p


def _validate(args):
    allowed = _ALLOWED[args.command]
    bad = [k for k in _OPTIONAL if getattr(args, k) is not None and k not in allowed]
    if bad:
        flags = ", ".join("--" + k.replace("_", "-") for k in bad)
        raise UsageError(f"{args.command} does not take {flags}")
    if args.command in ("leading",) and args.group not in (None, "pgl3"):
        raise UsageError("leading is defined for pgl3 only")


def _engine(args) -> Engine:
    engine = Engine(seed=args.seed)
    path = args.cache_path
    if path and args.command != "cache" and os.path.exists(path):
        engine.load(path)
    elif path and args.command == "cache" and args.action == "warm" and os.path.exists(path):
        engine.load(path)
    return engine


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        args.cache_path = args.cache_file or os.environ.get(CACHE_ENV) or None
        _validate(args)
        engine = _engine(args)
        result = COMMANDS[args.command](args, engine)
        if args.command == "sweep" and args.cache_path:
            engine.save(args.cache_path)
    except SystemExit as exc:  # --help, --version
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (AdlvError, CacheFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    out.write(result.render(args.format))
    return result.status


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)
