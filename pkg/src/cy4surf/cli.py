"""Command-line front end.

Exit codes: 0 all checks pass, 1 a consistency check failed, 2 bad input
(parse or validation), 3 a mathematical error such as a surface not lying on X.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chern import SurfaceDegrees, chern_summary
from .config import RunConfig, default_prime_field, parse_config
from .errors import Cy4SurfError, FieldError, NotHomogeneous, ParseError, ValidationError
from .hilbert import KoszulProfile, hilbert_polynomial, koszul_hilbert_function
from .invariants import ORDERINGS, full_report, rigid_table
from .symplectic import PRESETS, k3_symmetric_square_rvd, preset_summary, product_k3_rho

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3
INPUT_ERRORS = (ParseError, ValidationError, FieldError, NotHomogeneous, OSError)


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _int_tuple(text):
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(data, as_json, text_lines, out):
    if as_json:
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _table(headers, rows):
    cells = [[str(h) for h in headers]] + [["-" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def _fmt_degrees(d):
    return "(" + ",".join(str(x) for x in d) + ")"


# -- report rendering ------------------------------------------------------------------

REPORT_FIELDS = ("chi_OS", "gamma_sq", "chi_N", "h0_N", "h1_N", "vd", "rvd", "rho_gamma", "rigid_by_inequality", "semi_regular")


def report_lines(d: dict) -> list:
    lines = [
        f"surface {_fmt_degrees(d['surface_degrees'])} in CY {_fmt_degrees(d['cy_degrees'])} in P^{d['ambient_N']}"
        + (f"  [{d['label']}" + (f" over {d['field']}" if d["field"] else "") + "]" if d["label"] else "")
    ]
    for key in REPORT_FIELDS:
        v = d[key]
        lines.append(f"  {key:<20} {'-' if v is None else v}")
    if d["note"]:
        lines.append(f"  note: {d['note']}")
    for c in d["checks"]:
        lines.append(f"  [{'ok' if c['passed'] else 'FAIL'}] {c['name']}: {c['detail']}")
    return lines


def _config_from_args(args) -> RunConfig:
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    else:
        if args.ambient is None or args.cy_degrees is None or args.surface_degrees is None:
            raise ValidationError("give --config, or all of --ambient, --cy-degrees and --surface-degrees")
        cfg = RunConfig(ambient_N=args.ambient, cy_degrees=args.cy_degrees, surface_degrees=args.surface_degrees)
        cfg.degrees()
        cfg.field = default_prime_field()
    if getattr(args, "json", False):
        cfg.output_format = "json"
    return cfg


# -- commands --------------------------------------------------------------------------


def cmd_hilbert(args, out):
    P = KoszulProfile(args.ambient, args.degrees)
    lo, hi = args.min_degree, args.max_degree
    values = {n: koszul_hilbert_function(P, n) for n in range(lo, hi + 1)}
    poly = hilbert_polynomial(P)
    data = {
        "ambient_N": P.ambient_N,
        "degrees": list(args.degrees),
        "hilbert_function": {str(n): v for n, v in values.items()},
        "hilbert_polynomial": [str(c) for c in poly.coeffs],
    }
    lines = _table(["n", "H(n)"], list(values.items()))
    lines.append(f"Hilbert polynomial: {poly}")
    lines.append("coefficients (t^0 first): " + ", ".join(str(c) for c in poly.coeffs))
    _emit(data, args.json, lines, out)
    return EXIT_OK


def cmd_chern(args, out):
    cfg = _config_from_args(args)
    s = chern_summary(cfg.degrees())
    data = {
        "ambient_N": cfg.ambient_N,
        "cy_degrees": list(cfg.cy_degrees),
        "surface_degrees": list(cfg.surface_degrees),
        "c_normal": [str(c) for c in s["c_normal"].coeffs],
        "c_tangent": [str(c) for c in s["c_tangent"].coeffs],
        "K2": s["K2"],
        "c2": s["c2"],
        "chi_OS": s["chi_OS"],
        "gamma_sq": s["gamma_sq"],
        "chi_N": s["chi_N"],
    }
    lines = [
        f"c(N_S/X)  = {s['c_normal']}",
        f"c(T_S)    = {s['c_tangent']}",
        f"K^2       = {s['K2']}",
        f"c_2       = {s['c2']}",
        f"chi(O_S)  = {s['chi_OS']}",
        f"gamma^2   = {s['gamma_sq']}",
        f"chi(N)    = {s['chi_N']}",
    ]
    _emit(data, cfg.output_format == "json", lines, out)
    return EXIT_OK


def _report_command(cfg: RunConfig, out):
    pair = cfg.pair()
    target = pair if pair is not None else cfg.degrees()
    cross = cfg.cross_pairs() if pair is not None else []
    report = full_report(target, cross_check=cross)
    d = report.as_dict()
    _emit(d, cfg.output_format == "json", report_lines(d), out)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_rvd(args, out):
    cfg = _config_from_args(args)
    if cfg.mode == "degrees":
        raise ValidationError("rvd needs explicit polynomials or a construction in the config")
    return _report_command(cfg, out)


def cmd_invariants(args, out):
    return _report_command(_config_from_args(args), out)


def cmd_rigid_table(args, out):
    reports = rigid_table(args.ambient, args.cy_degrees, args.max_degree, args.order)
    rows = [r.as_dict() for r in reports]
    headers = ["d", "chi", "gamma^2", "chi(N)", "vd", "rvd", "rho"]
    table = [
        [_fmt_degrees(r["surface_degrees"]), r["chi_OS"], r["gamma_sq"], r["chi_N"], r["vd"], r["rvd"], r["rho_gamma"]]
        for r in rows
    ]
    lines = _table(headers, table)
    for r in rows:
        for c in r["checks"]:
            if not c["passed"]:
                lines.append(f"[FAIL] {_fmt_degrees(r['surface_degrees'])} {c['name']}: {c['detail']}")
    _emit(rows, args.json, lines, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CHECK


def cmd_symplectic(args, out):
    if args.preset in PRESETS:
        s = preset_summary(args.preset)
        data = {k: _num(v) for k, v in s.items()}
    elif args.preset == "k3sq":
        if args.genus is None:
            raise ValidationError("k3sq needs --genus")
        data = {"preset": "k3sq", "genus": args.genus, "rvd": _num(k3_symmetric_square_rvd(args.genus))}
    else:
        data = {"preset": "k3xk3", "rho": product_k3_rho()}
    lines = [f"{k:<26} {v}" for k, v in data.items()]
    _emit(data, args.json, lines, out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = argparse.ArgumentParser(prog="cy4surf", description="Invariants of complete-intersection surfaces in Calabi-Yau 4-folds.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert function and polynomial of a complete intersection")
    h.add_argument("--ambient", type=int, required=True, help="N for P^N")
    h.add_argument("--degrees", type=_int_tuple, required=True, help="equation degrees, e.g. 1,2,3")
    h.add_argument("--min-degree", type=int, default=0)
    h.add_argument("--max-degree", type=int, default=10)
    h.set_defaults(func=cmd_hilbert)

    def config_or_degrees(sp):
        sp.add_argument("--config", help="configuration file")
        sp.add_argument("--ambient", type=int)
        sp.add_argument("--cy-degrees", type=_int_tuple)
        sp.add_argument("--surface-degrees", type=_int_tuple)

    c = sub.add_parser("chern", parents=[common], help="Chern classes, chi(O_S), gamma^2, chi(N)")
    config_or_degrees(c)
    c.set_defaults(func=cmd_chern)

    r = sub.add_parser("rvd", parents=[common], help="h^0(N_S/X) = rvd from explicit equations")
    r.add_argument("--config", required=True, help="configuration file")
    r.set_defaults(func=cmd_rvd)

    i = sub.add_parser("invariants", parents=[common], help="full invariant report for one configuration")
    config_or_degrees(i)
    i.set_defaults(func=cmd_invariants)

    t = sub.add_parser("rigid-table", parents=[common], help="rho for every degree tuple forced rigid by the inequality")
    t.add_argument("--ambient", type=int, default=5)
    t.add_argument("--cy-degrees", type=_int_tuple, default=(6,))
    t.add_argument("--max-degree", type=int, default=4)
    t.add_argument("--order", choices=sorted(ORDERINGS), default="canonical-class")
    t.set_defaults(func=cmd_rigid_table)

    s = sub.add_parser("symplectic", parents=[common], help="closed forms for holomorphic-symplectic 4-folds")
    s.add_argument("preset", choices=sorted(PRESETS) + ["k3sq", "k3xk3"])
    s.add_argument("--genus", type=int)
    s.set_defaults(func=cmd_symplectic)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Cy4SurfError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
