"""Command-line front end: ``braidlevel <verb> [SPEC] [options]``.

Exit status: 0 on success, 1 when a verification fails, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from braidlevel import charpoly as cp
from braidlevel._runtime import CapExceeded
from braidlevel.arrangement import ArrangementSpec, SpecError, parse_spec
from braidlevel.digraph import SCHEMA, DigraphError, enumerate_census, iter_regions, level, sample_point
from braidlevel.geomoracle import geometric_census
from braidlevel.levels import LevelsError, R1Table, level_table, rl_closed_ab, rl_family, rl_from_r1
from braidlevel.polyalg import format_poly, frac_str
from braidlevel.roots import root_report, verify_root_structure
from braidlevel.verify import check_family, check_spec, run_checks, sweep

VERBS = ("census", "charpoly", "levels", "roots", "verify", "sample")
METHOD_ALIASES = {
    "ff": "finite_field",
    "whitney": "whitney",
    "closed": "closed_ab",
    "census": "from_census",
}


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidlevel", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=VERBS)
    p.add_argument("spec_arg", nargs="?", metavar="SPEC", help='e.g. "n=3;A={1,2}"')
    p.add_argument("--spec", help="arrangement spec (alternative to the positional SPEC)")
    p.add_argument("--method", choices=["digraph", "geometric", "ff", "whitney", "closed", "census"])
    p.add_argument("--l", type=int, dest="level", help="restrict to one level")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--max-n", type=int, default=None, help="largest n in verification sweeps")
    p.add_argument("--cap", type=float, default=None, help="search-space cap (region limit for sample)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--strict-44-1", action="store_true", dest="strict_linial",
                   help="evaluate the extended Linial level formula without the C(n-1, j) factor")
    return p


def _spec(args) -> ArrangementSpec:
    text = args.spec or args.spec_arg
    if not text:
        raise UsageError(f"{args.verb} needs an arrangement spec")
    return parse_spec(text)


def _cap(args) -> Optional[int]:
    return None if args.cap is None else int(args.cap)


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_census(args) -> int:
    spec = _spec(args)
    method = args.method or "digraph"
    if method == "digraph":
        census = enumerate_census(spec, cap=_cap(args), jobs=args.jobs)
    elif method == "geometric":
        census = geometric_census(spec, cap=_cap(args), jobs=args.jobs)
    else:
        raise UsageError("census supports --method digraph or geometric")
    if args.format == "csv":
        sys.stdout.write(census.to_csv())
    elif args.format == "text":
        print(f"{spec.label()}  r = {list(census.counts)}  total = {census.total}")
    else:
        _emit(census.to_dict())
    return 0


def _charpoly(spec: ArrangementSpec, method: Optional[str], cap: Optional[int], jobs: int) -> cp.CharPolyResult:
    if method is None:
        try:
            return cp.charpoly_finite_field(spec, cap=cap, jobs=jobs)
        except CapExceeded:
            return cp.charpoly_from_census(enumerate_census(spec, cap=cap, jobs=jobs))
    name = METHOD_ALIASES.get(method)
    if name is None:
        raise UsageError(f"charpoly does not support --method {method}")
    if name == "finite_field":
        return cp.charpoly_finite_field(spec, cap=cap, jobs=jobs)
    if name == "whitney":
        return cp.charpoly_whitney(spec, cap=cap)
    if name == "from_census":
        return cp.charpoly_from_census(enumerate_census(spec, cap=cap, jobs=jobs))
    return cp.charpoly(spec, name)


def cmd_charpoly(args) -> int:
    spec = _spec(args)
    res = _charpoly(spec, args.method, _cap(args), args.jobs)
    if args.format == "text":
        print(format_poly(res.poly))
    elif args.format == "csv":
        print("power,coeff")
        for i, c in enumerate(res.poly.coeffs):
            print(f"{i},{frac_str(c)}")
    else:
        _emit(res.to_dict())
    return 0


def _level_values(spec: ArrangementSpec, args) -> tuple[list, str]:
    method = args.method or "digraph"
    n = spec.n
    if method in ("digraph", "geometric"):
        census = (enumerate_census if method == "digraph" else geometric_census)(spec, cap=_cap(args), jobs=args.jobs)
        return list(census.counts), method
    if method == "closed":
        if spec.preset in ("shi", "catalan", "linial"):
            b = dict(spec.params)["b"]
            strict = args.strict_linial and spec.preset == "linial"
            vals = [rl_family(spec.preset, n, l, b, strict=strict) for l in range(n + 1)]
            return vals, f"{spec.preset}_formula" + ("_strict" if strict else "")
        ab = spec.interval_params()
        if ab is None:
            raise UsageError("closed level formulas need a shi/catalan/linial preset or A = [-a, b]")
        return [rl_closed_ab(n, l, *ab) for l in range(n + 1)], "closed_ab"
    if method in ("ff", "whitney", "census"):
        name = METHOD_ALIASES[method]
        table = R1Table(tuple(cp.zaslavsky_counts(cp.charpoly(spec.with_n(k), name))[1] for k in range(1, n + 1)))
        vals = [rl_from_r1(n, l, table) if n else (1 if l == 0 else 0) for l in range(n + 1)]
        return vals, f"r1_convolution_{name}"
    raise UsageError(f"levels does not support --method {method}")


def cmd_levels(args) -> int:
    spec = _spec(args)
    vals, method = _level_values(spec, args)
    ls = range(spec.n + 1) if args.level is None else [args.level]
    rows = [(spec.n, l, vals[l] if 0 <= l < len(vals) else 0, method) for l in ls]
    if args.format == "csv":
        sys.stdout.write(level_table(rows))
    elif args.format == "text":
        for n, l, v, m in rows:
            print(f"n={n} l={l} r_l={frac_str(v)} [{m}]")
    else:
        _emit({
            "schema": SCHEMA,
            "n": spec.n,
            "A": [frac_str(a) for a in spec.offsets],
            "method": method,
            "levels": [{"l": l, "value": frac_str(v)} for _, l, v, _ in rows],
        })
    return 0


def cmd_roots(args) -> int:
    spec = _spec(args)
    ab = spec.interval_params()
    offs = [int(a) for a in spec.offsets] if spec.is_integral() else None
    if spec.n >= 2 and ab is not None:
        report = verify_root_structure(spec.n, *ab, family="interval")
    elif spec.n >= 2 and offs and offs[0] == 1 and offs == list(range(1, len(offs) + 1)):
        report = verify_root_structure(spec.n, 0, offs[-1], family="single_offset")
    else:
        report = root_report(_charpoly(spec, None, _cap(args), args.jobs).poly, [Fraction(0)])
        report.within_hypotheses = False
        report.note = "no root-structure prediction for this offset set"
    if args.format == "text":
        print(f"chi = {format_poly(report.poly)}")
        print(f"real roots: {report.real_root_count}")
        for r, k in report.certified_roots:
            print(f"  root {frac_str(r)} multiplicity {k}")
        print(f"verdict: {report.verdict} {report.note}".rstrip())
    else:
        _emit(report.to_dict())
    return 1 if report.verdict is False else 0


def cmd_verify(args) -> int:
    text = args.spec or args.spec_arg
    cap = _cap(args)
    if text:
        spec = parse_spec(text)
        checks = list(check_spec(spec, cap=cap, jobs=args.jobs))
        N = args.max_n if args.max_n is not None else spec.n
        if N >= 1 and spec.m:
            checks += list(check_family(spec.with_n(1), N, cap=cap))
        ok = run_checks(checks)
    else:
        ok = run_checks(sweep(max_n=args.max_n or 4, cap=cap, jobs=args.jobs))
    print("ALL PASS" if ok else "FAILURES")
    return 0 if ok else 1


def cmd_sample(args) -> int:
    spec = _spec(args)
    limit = _cap(args) or 1000
    out = []
    for d in iter_regions(spec):
        if len(out) >= limit:
            break
        out.append({
            "choices": list(d.choices),
            "level": level(d),
            "point": [frac_str(v) for v in sample_point(d)],
        })
    if args.format == "text":
        for r in out:
            print(f"{r['choices']} level={r['level']} x=({', '.join(r['point'])})")
    else:
        _emit({"schema": SCHEMA, "n": spec.n, "A": [frac_str(a) for a in spec.offsets], "regions": out})
    return 0


COMMANDS = {
    "census": cmd_census,
    "charpoly": cmd_charpoly,
    "levels": cmd_levels,
    "roots": cmd_roots,
    "verify": cmd_verify,
    "sample": cmd_sample,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.verb](args)
    except (SpecError, UsageError, CapExceeded, DigraphError, LevelsError, cp.CharPolyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
