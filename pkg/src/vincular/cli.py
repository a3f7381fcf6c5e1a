"""Command-line front end: ``vincular count|table|series|bijection|verify``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

from . import __version__
from .bijection import check_phi_properties, phi
from .closed_forms import verify_report
from .config import check_cap
from .errors import EnumerationCapError, NonIntegralError, VincularError
from .oracle import count
from .pattern import k_pattern
from .gf import FORMULAS, cf_series, series_from_formula
from .perm import format_permutation, parse_permutation
from .recurrences import K_TAGS, eval_k_family
from .routing import ENGINES, count_value, family_value
from .series import EGF
from .suites import SUITES, run_suites

FIELDS = ("query", "n", "value", "provenance", "version")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _num(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _record(query: str, n, value, provenance: str, **extra) -> dict:
    rec = {"query": query, "n": n, "value": value, "provenance": provenance, "version": __version__}
    rec.update(extra)
    return rec


class _Emitter:
    def __init__(self, fmt: str, out):
        self.fmt, self.out = fmt, out
        self.writer = None

    def emit(self, rec: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(rec) + "\n")
            return
        if self.writer is None:
            self.writer = csv.DictWriter(self.out, fieldnames=list(rec), lineterminator="\n")
            self.writer.writeheader()
        self.writer.writerow(rec)


def _split_patterns(text: str | None) -> list[str]:
    return [t for t in (text or "").split(",") if t]


def _cmd_count(a, em: _Emitter) -> int:
    avoid = _split_patterns(a.avoid)
    if a.contain is None and a.r is not None:
        raise VincularError("--r needs --contain")
    contain = [(a.contain, a.r or 0)] if a.contain else []
    res = count_value(avoid, contain, a.n, a.engine)
    q = f"count avoid={','.join(avoid) or '-'}"
    if contain:
        q += f" contain={contain[0][0]} r={contain[0][1]}"
    em.emit(_record(q, a.n, _num(res.value), res.provenance))
    return EXIT_OK


def _cmd_table(a, em: _Emitter) -> int:
    fam = a.family
    head, _, tail = fam.partition(":")
    for n in range(a.n_max + 1):
        if head in K_TAGS:
            k = int(tail)
            if a.engine == "oracle":
                kinds = {"NODASH_K": "nodash", "DASH_K": "dash", "K_KM1": "kkm1"}
                pat = str(k_pattern(kinds[head], k))
                val = (count(["12-3"], [(pat, a.r)], n) if head == "NODASH_K"
                       else count(["12-3", pat], [], n))
                prov = "oracle"
            else:
                val, prov = eval_k_family(head, k, a.r, n), "recurrence"
        else:
            res = family_value(fam, a.r, n, a.engine)
            val, prov = res.value, res.provenance
        em.emit(_record(f"table family={fam} r={a.r}", n, _num(val), prov))
    return EXIT_OK


def _cmd_series(a, em: _Emitter) -> int:
    if a.cf:
        missing = [k for k in ("x", "y", "p", "q") if getattr(a, k) is None]
        if missing:
            raise VincularError(f"--cf needs {', '.join('--' + m for m in missing)}")
        vals = [Fraction(getattr(a, k)) for k in ("x", "y", "p", "q")]
        s = cf_series(*vals, a.order)
        q = "series cf " + " ".join(f"{k}={_num(v)}" for k, v in zip("xypq", vals))
        for n, c in enumerate(s.coeffs):
            em.emit(_record(q, n, _num(c), "series"))
        return EXIT_OK
    if not a.formula:
        raise VincularError("series needs --formula ID or --cf")
    s = series_from_formula(a.formula, r=a.r, order=a.order, k=a.k)
    q = f"series formula={a.formula} r={a.r}" + (f" k={a.k}" if a.k is not None else "")
    for n, c in enumerate(s.coeffs):
        v = c * factorial(n) if s.kind == EGF else c
        em.emit(_record(q, n, _num(v), "series"))
    return EXIT_OK


def _cmd_bijection(a, em: _Emitter) -> int:
    if a.apply is not None:
        p = parse_permutation(a.apply)
        em.emit(_record(f"bijection apply={format_permutation(p)}", len(p),
                        format_permutation(phi(p)), "oracle"))
        return EXIT_OK
    rep = check_phi_properties(a.n)
    em.emit(_record(f"bijection n={a.n} checked", a.n, str(rep.checked), "oracle"))
    for kind, cnt in sorted(rep.kinds().items()):
        em.emit(_record(f"bijection n={a.n} violations {kind}", a.n, str(cnt), "oracle"))
    return EXIT_OK if rep.clean else EXIT_VERIFY


_PROVENANCE = {"closed-forms": "closed-form", "recurrences": "recurrence",
               "series": "series", "bijection": "oracle"}


def _cmd_verify(a, em: _Emitter) -> int:
    check_cap(a.n_max)
    findings = run_suites(a.suite, a.n_max)
    for f in findings:
        em.emit(_record(f"verify suite={f.suite} check={f.check}", a.n_max, f.status,
                        _PROVENANCE[f.suite], detail=f.detail))
    if a.ledger_dir:
        rep = verify_report(None, a.n_max)
        out = Path(a.ledger_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "closed_form_ledger.json").write_text(rep.to_json() + "\n")
        (out / "closed_form_ledger.txt").write_text(rep.to_text())
    return EXIT_OK if all(f.ok for f in findings) else EXIT_VERIFY


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vincular", description="Type (2,1) vincular pattern enumeration.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", dest="sub_format", choices=("json", "csv"))

    c = sub.add_parser("count", parents=[fmt], help="count one pattern class")
    c.add_argument("--avoid", required=True, help="comma-separated patterns to avoid")
    c.add_argument("--contain", help="pattern contained exactly r times")
    c.add_argument("--r", type=int)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--engine", choices=ENGINES, default="auto")
    c.set_defaults(run=_cmd_count)

    t = sub.add_parser("table", parents=[fmt], help="counts for n = 0..n-max")
    t.add_argument("--family", required=True, help="f:13-2, g:21-3, ... or NODASH_K:3, DASH_K:4, K_KM1:4")
    t.add_argument("--r", type=int, default=0)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--engine", choices=ENGINES, default="auto")
    t.set_defaults(run=_cmd_table)

    s = sub.add_parser("series", parents=[fmt], help="series coefficients")
    s.add_argument("--formula", choices=sorted(FORMULAS))
    s.add_argument("--r", type=int, default=0)
    s.add_argument("--k", type=int)
    s.add_argument("--cf", action="store_true", help="expand the continued fraction instead")
    for name in ("x", "y", "p", "q"):
        s.add_argument(f"--{name}")
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(run=_cmd_series)

    b = sub.add_parser("bijection", parents=[fmt], help="check or apply the 12-3 -> 21-3 involution")
    b.add_argument("--n", type=int, default=0)
    b.add_argument("--apply", metavar="PERM")
    b.set_defaults(run=_cmd_bijection)

    v = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    v.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    v.add_argument("--n-max", type=int, default=9)
    v.add_argument("--ledger-dir", help="also write the closed-form ledger (JSON and text) here")
    v.set_defaults(run=_cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, _Emitter(args.sub_format or args.format, out))
    except EnumerationCapError as exc:
        sys.stderr.write(f"vincular: {exc}\n")
        return EXIT_CAP
    except (VincularError, ValueError, NonIntegralError) as exc:
        sys.stderr.write(f"vincular: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
