"""Command-line entry point.

Every subcommand writes JSON by default.  Integers and rationals are
printed as decimal strings; floats only appear for approximate quantities
and come with a "precision" field.  Usage errors exit 2, computation
errors exit 1 with a JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import families, hexsys, limits, polyx, realroots, resonance, scan

PROPS = ("symmetric", "unimodal", "logconcave", "newton", "realrooted", "hurwitz")


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=None if isinstance(obj, list) else 2))
    elif isinstance(obj, dict):
        for k, v in obj.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v)}")
    else:
        print(obj)


def _system(args) -> hexsys.HexSystem:
    if getattr(args, "cells", None):
        return hexsys.from_code(args.cells)
    if getattr(args, "named", None):
        return hexsys.families_builder(args.named, 1)
    if getattr(args, "family", None):
        return hexsys.families_builder(args.family, args.n, args.m)
    raise ValueError("give --cells, --named or --family")


def _poly_from_args(args) -> polyx.Polynomial:
    if getattr(args, "coeffs", None):
        return polyx.parse_coeffs(args.coeffs)
    if getattr(args, "cells", None):
        return resonance.sextet_polynomial(hexsys.from_code(args.cells))
    if getattr(args, "family", None):
        return families.family(args.family, args.n, args.m)
    raise ValueError("give --coeffs, --cells or --family")


def _poly_out(f: polyx.Polynomial, fmt: str):
    if fmt == "json":
        print(json.dumps(f.to_json()))
    elif fmt == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["k", "coeff"])
        for k, c in enumerate(f.coeffs):
            w.writerow([k, c])
    else:
        print(f)


def cmd_family(args):
    _poly_out(families.family(args.id, args.n, args.m), args.format)


def _resonance_cmd(kind):
    def run(args):
        h = _system(args)
        if kind == "sextet":
            f = resonance.sextet_polynomial(h)
        elif kind == "chi":
            f = resonance.clar_covering_polynomial(h)
        else:
            f = resonance.phi_polynomial(h, args.orientation)
        _poly_out(f, args.format)

    return run


def cmd_profile(args):
    _emit(resonance.resonance_profile(_system(args), args.orientation).to_json(), args.format)


def _root_rows(f: polyx.Polynomial, width: Fraction):
    iso = realroots.isolate_roots(f, width)
    return iso, [(k + 1, iv) for k, iv in enumerate(iso.intervals)]


def cmd_roots(args):
    f = _poly_from_args(args)
    width = Fraction(args.isolate)
    iso, rows = _root_rows(f, width)
    label = args.family or ("cells" if args.cells else "coeffs")
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["family", "n", "k", "root_lo", "root_hi"])
        for k, iv in rows:
            for _ in range(iv.mult):
                w.writerow([label, args.n, k, str(iv.lo), str(iv.hi)])
        return
    out = {"degree": iso.degree, "intervals": iso.to_json(), "nonreal_count": iso.nonreal_count}
    if args.complex:
        out["complex"] = [z.to_json() for z in realroots.approx_complex_roots(f, args.tol)]
        out["precision"] = args.tol
    _emit(out, args.format)


def cmd_zeros(args):
    w = csv.writer(sys.stdout)
    w.writerow(["family", "n", "k", "root_lo", "root_hi"])
    width = Fraction(args.isolate)
    for n in range(1, args.n_max + 1):
        f = families.family(args.family, n, args.m)
        _, rows = _root_rows(f, width)
        for k, iv in rows:
            w.writerow([args.family, n, k, str(iv.lo), str(iv.hi)])


def _prop(name: str, f: polyx.Polynomial) -> bool:
    if name == "symmetric":
        return polyx.is_symmetric(f)
    if name == "unimodal":
        return polyx.is_unimodal(f)
    if name == "logconcave":
        return polyx.is_log_concave(f)
    if name == "newton":
        return polyx.newton_check(f)
    if name == "realrooted":
        return realroots.is_real_rooted(f)
    if name == "hurwitz":
        return realroots.hurwitz_stable(f)
    raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPS)}")


def cmd_check(args):
    f = _poly_from_args(args)
    names = [p.strip() for p in args.props.split(",") if p.strip()]
    result = {p: ("pass" if _prop(p, f) else "fail") for p in names}
    if args.format == "plain" and len(result) == 1:
        print(next(iter(result.values())))
    else:
        _emit(result, args.format)


def cmd_identities(args):
    rep = families.verify_pyrene_identities(args.n_max)
    _emit(rep.to_json(), args.format)
    return 0 if rep.ok else 1


def cmd_limits(args):
    if args.m_interval is not None:
        _emit(limits.interval_Im(args.m_interval).to_json(), args.format)
        return
    _emit(limits.family_limit_set(args.family, args.m).to_json(), args.format)


def cmd_density(args):
    w = limits.density_witness(Fraction(args.target), Fraction(args.eps), args.n_cap)
    _emit(w.to_json(), args.format)


def cmd_normality(args):
    out = limits.normality_stats(args.n, with_sup=not args.no_sup).to_json()
    _emit(out, args.format)


def cmd_re(args):
    out = {"n": args.n, "re": limits.aihara_re_pyrene(args.n), "precision": "double"}
    out["re_per_n"] = out["re"] / args.n
    if args.general:
        out["re_from_roots"] = limits.aihara_re(families.pyrene(args.n))
    _emit(out, args.format)


def cmd_scan(args):
    checks = None if args.checks in (None, "all") else [c.strip() for c in args.checks.split(",")]
    manifest = scan.run_scan(args.h_max, checks, Path(args.out) if args.out else None, args.orientation)
    _emit(manifest, args.format)
    return 1 if manifest["identity_failures"] else 0


def cmd_enumerate(args):
    if args.count_only:
        _emit({str(k): v for k, v in hexsys.count_by_size(args.h_max).items()}, args.format)
        return
    for h in hexsys.enumerate_polyhexes(args.h_max):
        print(json.dumps({"hexagons": len(h.cells), "code": h.code}))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sextet", description="Sextet, Clar covering and related polynomials of hexagonal systems.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "csv", "plain"), default=default)

    def poly_source(sp):
        sp.add_argument("--coeffs", help="comma-separated coefficients, constant term first")
        sp.add_argument("--cells", help="cell code q,r;q,r;... (uses the sextet polynomial)")
        sp.add_argument("--family", choices=families.FAMILY_IDS)
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--m", type=int)

    sp = sub.add_parser("family", help="print a family polynomial")
    sp.add_argument("id", choices=families.FAMILY_IDS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_family)

    for kind in ("sextet", "chi", "phi"):
        sp = sub.add_parser(kind, help=f"{kind} polynomial of a hexagonal system")
        sp.add_argument("--cells")
        sp.add_argument("--named", choices=sorted(hexsys.NAMED))
        sp.add_argument("--family", choices=("pyrene", "line", "line-m", "u", "v"))
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--m", type=int)
        sp.add_argument("--orientation", choices=resonance.ORIENTATIONS, default="odd")
        fmt(sp)
        sp.set_defaults(func=_resonance_cmd(kind))

    sp = sub.add_parser("profile", help="Kekulé count, Clar number and all three polynomials")
    sp.add_argument("--cells")
    sp.add_argument("--named", choices=sorted(hexsys.NAMED))
    sp.add_argument("--orientation", choices=resonance.ORIENTATIONS, default="odd")
    fmt(sp)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("roots", help="isolate real roots exactly")
    poly_source(sp)
    sp.add_argument("--isolate", default="1/1000000", help="interval width (rational)")
    sp.add_argument("--complex", action="store_true", help="also list approximate complex roots")
    sp.add_argument("--tol", type=float, default=1e-10)
    fmt(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("zeros", help="CSV of isolated zeros for n = 1..n-max")
    sp.add_argument("--family", choices=families.FAMILY_IDS, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--isolate", default="1/1000000")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("check", help="coefficient and zero properties")
    poly_source(sp)
    sp.add_argument("--props", required=True, help=",".join(PROPS))
    fmt(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("identities", help="verify the pyrene identity battery")
    sp.add_argument("--n-max", type=int, default=10)
    fmt(sp)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("limits", help="real limit set of zeros of a family")
    sp.add_argument("--family", choices=("pyrene", "delannoy", "line-m", "u", "v"), default="pyrene")
    sp.add_argument("--m", type=int)
    sp.add_argument("--m-interval", type=int, help="print I_m from its closed form instead")
    fmt(sp)
    sp.set_defaults(func=cmd_limits)

    sp = sub.add_parser("density", help="certified family zero near a negative target")
    sp.add_argument("--target", required=True, help="negative rational; write --target=-7/3")
    sp.add_argument("--eps", default="1/1000")
    sp.add_argument("--n-cap", type=int, default=500)
    fmt(sp)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("normality", help="mean, variance and normal-approximation distances")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--no-sup", action="store_true", help="skip the CLT/LLT distances")
    fmt(sp)
    sp.set_defaults(func=cmd_normality)

    sp = sub.add_parser("re", help="resonance energy of the pyrene chain")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--general", action="store_true", help="also compute it from isolated roots")
    fmt(sp)
    sp.set_defaults(func=cmd_re)

    sp = sub.add_parser("scan", help="run all checks over systems up to h-max hexagons")
    sp.add_argument("--h-max", type=int, required=True)
    sp.add_argument("--checks", default="all", help="comma-separated ids or 'all': " + ",".join(scan.ALL_CHECKS))
    sp.add_argument("--out", help="NDJSON report path (manifest goes next to it)")
    sp.add_argument("--orientation", choices=resonance.ORIENTATIONS, default="odd")
    fmt(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("enumerate", help="list or count distinct hexagonal systems")
    sp.add_argument("--h-max", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except (ValueError, ArithmeticError, RuntimeError, KeyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
