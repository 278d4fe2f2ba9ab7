"""Acceptance criteria, one test per criterion, each reporting a PASS/FAIL line."""
import functools
import io
import math
from contextlib import redirect_stdout

import numpy as np
import pytest
from scipy.spatial import cKDTree

from weylcub import cli, tables
from weylcub.approx import coeffs_u, coeffs_v, gaussian_model
from weylcub.cubature import build_rule, integrate_pullback
from weylcub.grids import build_grid
from weylcub.liealg import SUPPORTED, build_algebra, enumerate_dominant, weight_in_MQ
from weylcub.orbitfuncs import TorusFunction, c_function, combination, discrete_sum, eval_S
from weylcub.refquad import ref_integral_F
from weylcub.verify import interior_points
from weylcub.xmap import eval_K, eval_X, jacobian_abs, numeric_jacobian_abs, pullback, substitution_scale

RANK2 = ("A2", "C2", "G2")


@functools.lru_cache(maxsize=None)
def table4_values(threads):
    return tables.table4(R=1024, threads=threads)


def test_criterion_01_table3_reproduction(report):
    got = tables.table3()
    worst = max(abs(g - w) for lab in RANK2 for g, w in zip(got[lab], tables.TABLE3_GOLDEN[lab]))
    ok = worst <= 5e-4
    report(1, ok, f"Table 3 max deviation {worst:.2e} (tol 5e-4)")
    assert ok


def test_criterion_02_area_at_M100(report):
    exact = {"A2": 2 * math.pi, "C2": 32 / 3, "G2": 128 / 15}
    got = tables.table3()
    dev = {lab: abs(got[lab][-1] - exact[lab]) for lab in RANK2}
    ok = all(v <= 3e-3 for v in dev.values())
    report(2, ok, "M=100 deviations " + ", ".join(f"{k} {v:.2e}" for k, v in dev.items()) + " (tol 3e-3)")
    assert ok, dev


def test_criterion_03_table4_reproduction(report):
    got = table4_values(1)
    rel = [abs(g - w) / w for g, w in zip(got, tables.TABLE4_GOLDEN)]
    ok = max(rel) <= 0.05
    detail = ", ".join(f"M={M}: {g:.6g} vs {w}" for M, g, w in zip(tables.TABLE4_M, got, tables.TABLE4_GOLDEN))
    report(3, ok, f"{detail} (max rel {max(rel):.2f}, tol 0.05)")
    assert ok, got


def test_criterion_04_tables_1_and_2(report):
    bad = tables.mismatches(tables.table1(), tables.TABLE1_GOLDEN)
    bad += tables.mismatches(tables.table2(), tables.TABLE2_GOLDEN)
    report(4, not bad, f"{len(bad)} mismatching entries")
    assert not bad


def test_criterion_05_discrete_orthogonality(report):
    worst = 0.0
    for label in SUPPORTED:
        d = build_algebra(label)
        for M in range(1, 11):
            grid = build_grid(d, M)
            full = d.c * M**d.rank
            for lam in enumerate_dominant(d, 2 * M - 1):
                want = full if weight_in_MQ(d, lam, M) else 0.0
                worst = max(worst, abs(discrete_sum(d, lam, grid) - want) / full)
    ok = worst <= 1e-9
    report(5, ok, f"max relative deviation {worst:.2e} (tol 1e-9)")
    assert ok


def test_criterion_06_cubature_exactness(report):
    rng = np.random.default_rng(6)
    worst = 0.0
    checked = 0
    for label in SUPPORTED:
        d = build_algebra(label)
        scale = substitution_scale(d)
        ref_cache = {}
        for M in (3, 5, 8):
            rule = build_rule(d, M)
            lams = enumerate_dominant(d, 2 * M - 1)
            for k in rng.integers(0, len(lams), size=200):
                lam = lams[k]
                if lam not in ref_cache:
                    ref_cache[lam] = scale * ref_integral_F(d, c_function(d, lam), 256).value
                worst = max(worst, abs(integrate_pullback(rule, c_function(d, lam)) - ref_cache[lam]))
                checked += 1
    ok = worst <= 1e-6
    report(6, ok, f"{checked} draws, max |cubature - reference| {worst:.2e} (tol 1e-6)")
    assert ok


def test_criterion_07_jacobian_identity(report):
    rng = np.random.default_rng(7)
    worst = 0.0
    for label in SUPPORTED:
        d = build_algebra(label)
        for x in interior_points(d, 100, rng):
            j = jacobian_abs(d, x)
            worst = max(worst, abs(numeric_jacobian_abs(d, x) - j) / j)
    ok = worst <= 1e-6
    report(7, ok, f"max relative deviation {worst:.2e} (tol 1e-6)")
    assert ok


def test_criterion_08_K_of_X(report):
    rng = np.random.default_rng(8)
    worst = 0.0
    for label in SUPPORTED:
        d = build_algebra(label)
        x = interior_points(d, 1000, rng)
        s2 = np.abs(eval_S(d, d.rho, x)) ** 2
        worst = max(worst, float(np.max(np.abs(eval_K(label, eval_X(d, x)) - s2) / s2)))
    ok = worst <= 1e-9
    report(8, ok, f"max relative deviation {worst:.2e} (tol 1e-9)")
    assert ok


def test_criterion_09_injectivity(report):
    collisions = []
    for label in SUPPORTED:
        d = build_algebra(label)
        for M in range(1, 61):
            y = eval_X(d, build_grid(d, M).alpha_array)
            if cKDTree(y).query_pairs(1e-9):
                collisions.append((label, M))
    report(9, not collisions, f"{len(collisions)} grids with coincident nodes (M <= 60)")
    assert not collisions


def test_criterion_10_approximation_algebra(report):
    worst_v = 0.0
    for label in SUPPORTED:
        d = build_algebra(label)
        for M in (1, 2, 4, 7, 10):
            for mu in enumerate_dominant(d, M - 1):
                co = coeffs_v(d, M, c_function(d, mu)).coeffs
                worst_v = max(worst_v, max(abs(a - (lam == mu)) for lam, a in co.items()))

    rng = np.random.default_rng(10)
    worst_uv = 0.0
    for label in RANK2:
        d = build_algebra(label)
        M = 5
        p = combination(d, {lam: complex(*rng.standard_normal(2)) for lam in enumerate_dominant(d, M - 1)})
        v = coeffs_v(d, M, p).coeffs
        u = coeffs_u(d, M, p).coeffs
        worst_uv = max(worst_uv, max(abs(v[lam] - u[lam]) for lam in v))

    # residual of the optimal approximant is K-orthogonal to every p_lambda it uses
    d = build_algebra("C2")
    M = 6
    u = coeffs_u(d, M, gaussian_model)
    g, approx = pullback(d, gaussian_model), u.trig(d)
    worst_res = 0.0
    for lam in u.coeffs:
        c = c_function(d, lam)
        r = TorusFunction(lambda a: (g(a) - approx(a)) * np.conj(c(a)))
        worst_res = max(worst_res, abs(ref_integral_F(d, r, 192).value))

    tol_oracle = 1e-6
    ok = worst_v <= 1e-8 and worst_uv <= tol_oracle and worst_res <= tol_oracle
    report(
        10,
        ok,
        f"recovery {worst_v:.1e} (tol 1e-8), v-u {worst_uv:.1e}, residual {worst_res:.1e} (tol {tol_oracle:g})",
    )
    assert ok


def _cli_stdout(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def test_criterion_11_thread_determinism(report):
    differing = []
    for which in ("1", "2", "3", "4"):
        if _cli_stdout(["table", which, "--threads", "1"]) != _cli_stdout(["table", which, "--threads", "4"]):
            differing.append(f"table {which} output")
    if tables.table3(threads=1) != tables.table3(threads=4):
        differing.append("table 3 values")
    if table4_values(1) != table4_values(4):
        differing.append("table 4 values")
    report(11, not differing, "bit-identical" if not differing else "differs: " + ", ".join(differing))
    assert not differing
