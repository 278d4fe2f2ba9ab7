"""Command-line interface: ``weylcub nodes|table|approx|verify``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import tables, verify
from .approx import CENTER, coeffs_v, error_L2K, eval_approx, gaussian_model
from .cubature import build_rule
from .errors import WeylcubError
from .liealg import SUPPORTED, build_algebra, coroot_coords
from .xmap import edge_samples, eval_X

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
CSV_HEADER = ("algebra", "M", "s0", "s1", "s2", "a1", "a2", "y1", "y2", "eps", "weight")


def _g(v) -> str:
    return format(float(v), ".17g")


def _pad(seq, size):
    return list(seq) + [""] * (size - len(seq))


def write_csv(rule, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for n in rule.nodes:
        w.writerow(
            [rule.algebra, rule.M]
            + _pad(list(n.index), 3)
            + _pad([_g(v) for v in n.x], 2)
            + _pad([_g(v) for v in n.y], 2)
            + [n.eps, _g(n.weight)]
        )


def rule_to_json(rule) -> dict:
    return {
        "algebra": rule.algebra,
        "M": rule.M,
        "prefactor": rule.prefactor,
        "nodes": [
            {
                "index": list(n.index),
                "x": [float(v) for v in n.x],
                "y": list(n.y),
                "eps": n.eps,
                "weight": n.weight,
            }
            for n in rule.nodes
        ],
    }


def write_svg(rule, fh):
    data = build_algebra(rule.algebra)
    curves = edge_samples(data, 512)
    if data.rank == 1:
        # plot the interval on a line so the output stays a valid figure
        curves = [np.column_stack([c[:, 0], np.zeros(len(c))]) for c in curves]
        nodes = np.column_stack([rule.y[:, 0], np.zeros(len(rule))])
    else:
        nodes = rule.y
    pts = np.vstack(curves)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-3 * max(hi - lo))
    lo, hi = lo - 0.05 * span, hi + 0.05 * span
    width, height = hi - lo
    r = 0.005 * width

    def sx(p):  # SVG's y axis points down
        return p[0], lo[1] + hi[1] - p[1]

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_g(lo[0])} {_g(lo[1])} {_g(width)} {_g(height)}">',
        f"<title>{rule.algebra} nodes, M={rule.M}</title>",
    ]
    for c in curves:
        path = " ".join("{},{}".format(*map(_g, sx(p))) for p in c)
        out.append(f'<polyline fill="none" stroke="black" stroke-width="{_g(r / 2)}" points="{path}"/>')
    for p in nodes:
        x, y = sx(p)
        out.append(f'<circle cx="{_g(x)}" cy="{_g(y)}" r="{_g(r)}" fill="steelblue"/>')
    out.append("</svg>")
    fh.write("\n".join(out) + "\n")


def cmd_nodes(args) -> int:
    rule = build_rule(build_algebra(args.algebra), args.M)
    with _open_out(args.out) as fh:
        if args.format == "csv":
            write_csv(rule, fh)
        elif args.format == "json":
            json.dump(rule_to_json(rule), fh, indent=1)
            fh.write("\n")
        else:
            write_svg(rule, fh)
    return EXIT_OK


def _print_grid(title, patterns, table, fh):
    print(title, file=fh)
    print(f"{'':10}" + "".join(f"{lab:>8}" for lab in tables.RANK2), file=fh)
    for pat in patterns:
        print(f"{pat:10}" + "".join(f"{table[pat].get(lab, '-'):>8}" for lab in tables.RANK2), file=fh)


def cmd_table(args) -> int:
    out = sys.stdout
    which = args.which
    if which == 1:
        got = tables.table1()
        _print_grid("h_lambda", tables.LABEL_PATTERNS, got, out)
        return EXIT_FAIL if tables.mismatches(got, tables.TABLE1_GOLDEN) else EXIT_OK
    if which == 2:
        got = tables.table2()
        _print_grid("eps_j", tables.INDEX_PATTERNS, got, out)
        return EXIT_FAIL if tables.mismatches(got, tables.TABLE2_GOLDEN) else EXIT_OK
    if which == 3:
        got = tables.table3(threads=args.threads)
        print("M".ljust(6) + "".join(f"{lab:>12}" for lab in tables.RANK2), file=out)
        for k, M in enumerate(tables.TABLE3_M):
            print(f"{M:<6}" + "".join(f"{tables.fmt(got[lab][k]):>12}" for lab in tables.RANK2), file=out)
        print("exact".ljust(6) + "".join(f"{tables.EXACT_AREA[lab]:>12}" for lab in tables.RANK2), file=out)
        return EXIT_OK
    got = tables.table4(R=args.R, threads=args.threads)
    print("M     L2_K error of v_M (C2 Gaussian)", file=out)
    for M, v in zip(tables.TABLE4_M, got):
        print(f"{M:<6}{tables.fmt(v)}", file=out)
    return EXIT_OK


def approx_center(data):
    """The C2 example centre, or X of the centroid of F for other algebras."""
    if data.label == "C2":
        return CENTER
    verts = [np.zeros(data.rank)]
    for i, m in enumerate(data.marks):
        om = [0] * data.rank
        om[i] = 1 / m
        verts.append(np.array([float(v) for v in coroot_coords(data, om)]))
    return tuple(eval_X(data, np.mean(verts, axis=0)[None, :])[0])


def sample_grid(data, count):
    """Regular barycentric samples of F as torus points."""
    verts = [np.zeros(data.rank)]
    for i, m in enumerate(data.marks):
        om = [0] * data.rank
        om[i] = 1 / m
        verts.append(np.array([float(v) for v in coroot_coords(data, om)]))
    verts = np.array(verts)
    rows = []
    for k in np.ndindex(*([count + 1] * data.rank)):
        if sum(k) <= count:
            b = np.array([count - sum(k), *k], dtype=float) / count
            rows.append(b @ verts)
    return np.array(rows)


def cmd_approx(args) -> int:
    data = build_algebra(args.algebra)
    center = approx_center(data)

    def f(y):
        return gaussian_model(y, center)

    co = coeffs_v(data, args.M, f)
    err = error_L2K(data, f, co, R=args.R, threads=args.threads)
    x = sample_grid(data, args.samples)
    y = eval_X(data, x)
    v = eval_approx(data, co, x, real=True)
    payload = {
        "algebra": data.label,
        "M": args.M,
        "center": list(center),
        "sigma": 0.35,
        "coefficients": [
            {"lambda": list(lam), "re": c.real, "im": c.imag} for lam, c in sorted(co.coeffs.items())
        ],
    }
    with _open_out(f"{args.out}_coeffs.json") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    with _open_out(f"{args.out}_samples.csv") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"y{i + 1}" for i in range(data.rank)] + ["f", "v"])
        for yy, fv, vv in zip(y, f(y), v):
            w.writerow([_g(c) for c in yy] + [_g(fv), _g(vv)])
    print(f"{data.label} M={args.M} coefficients={len(co.coeffs)} L2_K error={tables.fmt(err)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify.run(args.level)
    for c in checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        print(f"{line}  ({c.detail})" if c.detail else line)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


class _OutFile:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        if self.path in (None, "-"):
            self.fh = sys.stdout
        else:
            self.fh = open(self.path, "w", encoding="utf-8", newline="")
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        return False


def _open_out(path):
    return _OutFile(path)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylcub", description="Weyl-group cubature rules for A1, A2, C2 and G2.")
    sub = p.add_subparsers(dest="command", required=True)

    n = sub.add_parser("nodes", help="export the nodes and weights of a cubature rule")
    n.add_argument("--algebra", choices=SUPPORTED, required=True)
    n.add_argument("--M", type=_positive, required=True)
    n.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    n.add_argument("--out", default="-", help="output file, '-' for standard output")
    n.set_defaults(func=cmd_nodes)

    t = sub.add_parser("table", help="recompute one of the reference tables")
    t.add_argument("which", type=int, choices=(1, 2, 3, 4))
    t.add_argument("--threads", type=_positive, default=1)
    t.add_argument("--R", type=_positive, default=1024, help="reference grid resolution for table 4")
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("approx", help="approximate the Gaussian model by v_M")
    a.add_argument("--algebra", choices=SUPPORTED, default="C2")
    a.add_argument("--M", type=_positive, required=True)
    a.add_argument("--out", required=True, help="prefix for <prefix>_coeffs.json and <prefix>_samples.csv")
    a.add_argument("--R", type=_positive, default=1024)
    a.add_argument("--samples", type=_positive, default=64, help="sample grid subdivisions per edge of F")
    a.add_argument("--threads", type=_positive, default=1)
    a.set_defaults(func=cmd_approx)

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except OSError as e:
        print(f"weylcub: {e}", file=sys.stderr)
        return EXIT_IO
    except WeylcubError as e:
        print(f"weylcub: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"weylcub: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
