"""Command-line entry point.

Subcommands expose each library module with deterministic JSON output
(rationals as "p/q" strings, keys sorted) or a terse table rendering, and
``reproduce`` runs the full verification battery in one shot.

Exit codes: 0 success, 2 verification failure, 3 usage error,
4 insufficient order.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import catalog, characters, classify, forms, relations
from .mlde import (NotIndicialRoot, Resonance, build_flat, frobenius_solve,
                   frobenius_solve_log, indicial)
from .series import InsufficientOrder, Q, rat, rat_str, series_from_json_dict

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_USAGE = 3
EXIT_ORDER = 4


def default_order() -> int:
    env = os.environ.get("MLDE_DEFAULT_ORDER")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"MLDE_DEFAULT_ORDER must be an integer, got {env!r}")
    return 50


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}")


def _emit(payload, fmt: str, table_lines=None) -> None:
    if fmt == "table" and table_lines is not None:
        for line in table_lines:
            print(line)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _set_notation(values) -> str:
    return "{" + ", ".join(rat_str(v) for v in sorted(values)) + "}"


# -- subcommands ------------------------------------------------------

def cmd_forms(args) -> int:
    if args.forms_cmd == "dump":
        try:
            series = forms.form(args.name, args.order)
        except KeyError as exc:
            raise UsageError(str(exc))
        _emit({"name": args.name, "series": series.to_json_dict()}, args.format)
        return EXIT_OK
    # verify
    if args.group:
        reports = relations.verify_group(args.group, args.order)
    else:
        reports = relations.verify_all()
    bad = [r for r in reports if r["status"] == "failed"]
    lines = [f"{r['label']}: {r['status']}" for r in reports]
    _emit({"reports": reports, "failed": len(bad)}, args.format, lines)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_indicial(args) -> int:
    rep = indicial(build_flat(args.s, 4))
    payload = {
        "s": rat_str(args.s),
        "roots": [rat_str(r) for r in rep.roots],
        "degenerate": [[rat_str(a), rat_str(b)] for a, b in rep.degenerate],
        "resonant": [[rat_str(a), rat_str(b)] for a, b in rep.resonant],
    }
    _emit(payload, args.format, [_set_notation(set(rep.roots))])
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.alpha is None:
        raise UsageError("solve requires --alpha")
    op = build_flat(args.s, args.order + 2)
    try:
        if args.log:
            sol = frobenius_solve_log(op, args.alpha, args.order)
        else:
            sol = frobenius_solve(op, args.alpha, args.order)
    except (NotIndicialRoot, Resonance) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    payload = {
        "s": rat_str(args.s), "alpha": rat_str(args.alpha),
        "order": args.order, "series": sol.to_json_dict(),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_apply(args) -> int:
    if not args.series:
        raise UsageError("apply requires --series FILE")
    with open(args.series) as fh:
        f = series_from_json_dict(json.load(fh))
    op = build_flat(args.s, args.order + 2)
    out = op.apply(f)
    _emit({"s": rat_str(args.s), "series": out.to_json_dict()}, args.format)
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.all or args.case is None:
        final = classify.classify_all()
        payload = {"final": [rat_str(v) for v in final]}
        _emit(payload, args.format, [_set_notation(final)])
        return EXIT_OK
    case = classify.CASES[args.case]
    report = classify.filter_candidates(case, depth=args.depth)
    payload = {
        "case": args.case,
        "raw": [[rat_str(s), a1] for s, a1 in report.raw_candidates],
        "survivors": {str(k): [rat_str(v) for v in vs]
                      for k, vs in report.survivors_by_depth.items()},
        "final": [rat_str(v) for v in report.final],
    }
    _emit(payload, args.format, [_set_notation(report.final)])
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.catalog_cmd == "list":
        entries = [{"label": lb, "s": rat_str(catalog.entry(lb).s),
                    "exponent": rat_str(catalog.entry(lb).exponent)}
                   for lb in catalog.labels()]
        _emit({"entries": entries}, args.format,
              [e["label"] for e in entries])
        return EXIT_OK
    if args.catalog_cmd == "build":
        if not args.label:
            raise UsageError("catalog build requires --label")
        try:
            series = catalog.build_entry(args.label, args.order)
        except catalog.UnknownLabel as exc:
            raise UsageError(str(exc))
        _emit({"label": args.label, "series": series.to_json_dict()},
              args.format)
        return EXIT_OK
    # verify
    if args.label:
        reports = [catalog.verify_entry(args.label, args.order)]
    elif args.s is not None:
        labels = [lb for lb in catalog.labels()
                  if catalog.entry(lb).s == args.s]
        if not labels:
            raise UsageError(f"no catalog entries at s = {rat_str(args.s)}")
        reports = [catalog.verify_entry(lb) for lb in labels]
    else:
        reports = catalog.verify_all()
    bad = [r for r in reports
           if r["status"] == "failed" and r["label"] not in catalog.CATALOG_QUARANTINE]
    lines = [f"{r['label']}: {r['status']}" for r in reports]
    _emit({"reports": reports, "failed": len(bad)}, args.format, lines)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_characters(args) -> int:
    if not args.algebra:
        raise UsageError("characters requires --algebra")
    try:
        d = characters.datum(args.algebra)
    except KeyError as exc:
        raise UsageError(str(exc))
    payload = {
        "algebra": d.name, "s": rat_str(d.s),
        "exponents": [rat_str(e) for e in d.ramond_exponents],
    }
    status = EXIT_OK
    if d.verification == "full" and d.name not in ("G2", "F4"):
        basis = characters.ramond_character_basis(d.name, args.order)
        payload["characters"] = [chi.to_json_dict() for _, chi in basis]
    if args.verify:
        report = characters.verify_case(d.name, min(args.order, 25))
        payload["verified"] = report["status"] == "verified"
        payload["report"] = report
        if not payload["verified"]:
            status = EXIT_VERIFY
    _emit(payload, args.format,
          [f"{d.name}: s = {rat_str(d.s)}, exponents {_set_notation(d.ramond_exponents)}"])
    return status


def cmd_reproduce(args) -> int:
    report: dict = {}
    ok = True

    rel = relations.verify_all()
    report["forms"] = {
        "reports": rel,
        "quarantined": sorted(relations.QUARANTINED_LABELS),
    }
    ok &= all(r["status"] != "failed" for r in rel)

    final = classify.classify_all()
    report["classify"] = {"final": [rat_str(v) for v in final]}
    ok &= len(final) == 23

    cat = catalog.verify_all()
    cat_bad = [r["label"] for r in cat if r["status"] == "failed"
               and r["label"] not in catalog.CATALOG_QUARANTINE]
    report["catalog"] = {
        "reports": cat,
        "quarantine": sorted(catalog.CATALOG_QUARANTINE),
        "failed": cat_bad,
    }
    ok &= not cat_bad

    chars = {}
    for name in ("A2", "G2", "D4", "F4", "E6", "E7", "E8"):
        rep = characters.verify_case(name, 25)
        chars[name] = {"verified": rep["status"] == "verified", "report": rep}
        ok &= chars[name]["verified"]
    report["characters"] = chars
    report["ok"] = bool(ok)
    _emit(report, args.format)
    return EXIT_OK if ok else EXIT_VERIFY


# -- argument parsing -------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let bare negative rationals like -1/10 pass as option values
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mldelab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True):
        sp.add_argument("--format", choices=("json", "table"), default="json")
        if order:
            sp.add_argument("--order", type=int, default=None)

    forms_p = sub.add_parser("forms")
    forms_sub = forms_p.add_subparsers(dest="forms_cmd", required=True)
    dump_p = forms_sub.add_parser("dump")
    dump_p.add_argument("--name", required=True)
    common(dump_p)
    fv_p = forms_sub.add_parser("verify")
    fv_p.add_argument("--group", choices=tuple("abcdefg"), default=None)
    common(fv_p)

    ind_p = sub.add_parser("indicial")
    ind_p.add_argument("--s", type=_rat, required=True)
    common(ind_p, order=False)

    solve_p = sub.add_parser("solve")
    solve_p.add_argument("--s", type=_rat, required=True)
    solve_p.add_argument("--alpha", type=_rat, default=None)
    solve_p.add_argument("--log", action="store_true")
    common(solve_p)

    apply_p = sub.add_parser("apply")
    apply_p.add_argument("--s", type=_rat, required=True)
    apply_p.add_argument("--series", default=None)
    common(apply_p)

    cls_p = sub.add_parser("classify")
    cls_p.add_argument("--case", type=int, choices=(1, 2, 3, 4), default=None)
    cls_p.add_argument("--depth", type=int, default=None)
    cls_p.add_argument("--all", action="store_true")
    common(cls_p, order=False)

    cat_p = sub.add_parser("catalog")
    cat_sub = cat_p.add_subparsers(dest="catalog_cmd", required=True)
    cl_p = cat_sub.add_parser("list")
    common(cl_p, order=False)
    cb_p = cat_sub.add_parser("build")
    cb_p.add_argument("--label", default=None)
    common(cb_p)
    cv_p = cat_sub.add_parser("verify")
    cv_p.add_argument("--label", default=None)
    cv_p.add_argument("--s", type=_rat, default=None)
    cv_p.add_argument("--all", action="store_true")
    common(cv_p)

    ch_p = sub.add_parser("characters")
    ch_p.add_argument("--algebra", default=None)
    ch_p.add_argument("--verify", action="store_true")
    common(ch_p)

    rep_p = sub.add_parser("reproduce")
    common(rep_p)
    return p


_HANDLERS = {
    "forms": cmd_forms,
    "indicial": cmd_indicial,
    "solve": cmd_solve,
    "apply": cmd_apply,
    "classify": cmd_classify,
    "catalog": cmd_catalog,
    "characters": cmd_characters,
    "reproduce": cmd_reproduce,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "order", None) is None and hasattr(args, "order"):
            args.order = default_order()
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientOrder as exc:
        print(f"insufficient order: {exc}", file=sys.stderr)
        return EXIT_ORDER


if __name__ == "__main__":
    sys.exit(main())
