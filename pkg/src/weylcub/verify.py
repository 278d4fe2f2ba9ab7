"""Invariant suites behind ``weylcub verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from . import tables
from .cubature import build_rule, integrate_pullback
from .grids import build_grid, grid_weighted_count
from .liealg import SUPPORTED, _matmul, _transpose, build_algebra, enumerate_dominant, weight_in_MQ
from .orbitfuncs import c_function, discrete_sum, eval_S
from .refquad import ref_integral_F
from .weyl import orbit
from .xmap import eval_K, eval_X, jacobian_abs, numeric_jacobian_abs, substitution_scale

LEVELS = {
    "quick": {"M": 10, "R": 128, "inj_M": 20},
    "full": {"M": 30, "R": 512, "inj_M": 60},
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def interior_points(data, count, rng, margin=0.05):
    """Random points of F whose barycentric coordinates are all >= margin."""
    from .liealg import coroot_coords

    n = data.rank
    verts = [np.zeros(n)]
    for i, m in enumerate(data.marks):
        om = [0] * n
        om[i] = 1 / m
        verts.append(np.array([float(v) for v in coroot_coords(data, om)]))
    verts = np.array(verts)
    bary = rng.dirichlet(np.ones(n + 1), size=count)
    bary = margin + (1 - (n + 1) * margin) * bary
    return bary @ verts


def check_algebra(label):
    d = build_algebra(label)
    ok = _matmul(d.omega_in_coroot_basis, _transpose(d.cartan)) == tuple(
        tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank)
    )
    g = np.array([[float(v) for v in row] for row in d.gram])
    ok &= np.allclose(d.simple_roots @ d.simple_roots.T, g, atol=1e-12, rtol=0)
    ok &= math.isclose(abs(np.linalg.det(d.coroots)), d.weyl_order * d.vol_F, rel_tol=1e-12)
    return Check(f"{label} root data", bool(ok))


def check_separation(label, max_M):
    d = build_algebra(label)
    for M in range(1, max_M + 1):
        for lam in enumerate_dominant(d, 2 * M - 1):
            if any(lam) and weight_in_MQ(d, lam, M):
                return Check(f"{label} separation lemma", False, f"lam={lam} M={M}")
    return Check(f"{label} separation lemma", True)


def check_weighted_count(label, max_M):
    d = build_algebra(label)
    for M in range(1, max_M + 1):
        total = grid_weighted_count(build_grid(d, M))
        if total != d.c * M**d.rank:
            return Check(f"{label} sum of eps", False, f"M={M}: {total} != {d.c * M ** d.rank}")
    return Check(f"{label} sum of eps", True)


def check_discrete_orthogonality(label, max_M):
    d = build_algebra(label)
    worst = 0.0
    for M in range(1, max_M + 1):
        grid = build_grid(d, M)
        full = d.c * M**d.rank
        for lam in enumerate_dominant(d, 2 * M - 1):
            want = full * len(orbit(d, lam)) if weight_in_MQ(d, lam, M) else 0.0
            worst = max(worst, abs(discrete_sum(d, lam, grid) - want) / full)
    return Check(f"{label} discrete orthogonality", worst <= 1e-9, f"worst {worst:.2e}")


def check_exactness(label, Ms, R, count, rng):
    d = build_algebra(label)
    scale = substitution_scale(d)
    worst = 0.0
    for M in Ms:
        rule = build_rule(d, M)
        lams = enumerate_dominant(d, 2 * M - 1)
        for k in rng.choice(len(lams), size=min(count, len(lams)), replace=False):
            g = c_function(d, lams[k])
            ref = scale * ref_integral_F(d, g, R).value
            worst = max(worst, abs(integrate_pullback(rule, g) - ref))
    return Check(f"{label} cubature exactness", worst <= 1e-6, f"worst {worst:.2e}")


def check_K_identity(label, count, rng):
    d = build_algebra(label)
    # near the walls K(y) cancels catastrophically, so sample the interior
    x = interior_points(d, count, rng)
    s2 = np.abs(eval_S(d, d.rho, x)) ** 2
    k = eval_K(label, eval_X(d, x))
    rel = np.abs(k - s2) / s2
    return Check(f"{label} K(X) = |S_rho|^2", bool(np.all(rel <= 1e-9)), f"worst {rel.max():.2e}")


def check_jacobian(label, count, rng):
    d = build_algebra(label)
    worst = 0.0
    for x in interior_points(d, count, rng):
        j = jacobian_abs(d, x)
        worst = max(worst, abs(numeric_jacobian_abs(d, x) - j) / j)
    return Check(f"{label} Jacobian identity", worst <= 1e-6, f"worst {worst:.2e}")


def check_injectivity(label, max_M):
    d = build_algebra(label)
    for M in range(1, max_M + 1):
        y = eval_X(d, build_grid(d, M).alpha_array)
        if cKDTree(y).query_pairs(1e-9):
            return Check(f"{label} injectivity", False, f"M={M}")
    return Check(f"{label} injectivity", True)


def check_table12():
    bad = tables.mismatches(tables.table1(), tables.TABLE1_GOLDEN)
    bad += tables.mismatches(tables.table2(), tables.TABLE2_GOLDEN)
    return Check("tables 1 and 2", not bad, "; ".join(map(str, bad)))


def check_table3():
    got = tables.table3()
    worst = max(abs(g - w) for lab in got for g, w in zip(got[lab], tables.TABLE3_GOLDEN[lab]))
    return Check("table 3", worst <= 5e-4, f"worst {worst:.2e}")


def check_exact_area():
    exact = {"A2": 2 * math.pi, "C2": 32 / 3, "G2": 128 / 15}
    got = tables.table3()
    dev = {lab: abs(got[lab][-1] - exact[lab]) for lab in exact}
    return Check("M=100 areas within 3e-3", max(dev.values()) <= 3e-3, ", ".join(f"{k} {v:.2e}" for k, v in dev.items()))


def check_table4():
    got = tables.table4(R=1024)
    rel = [abs(g - w) / w for g, w in zip(got, tables.TABLE4_GOLDEN)]
    return Check("table 4", max(rel) <= 0.05, "computed " + ", ".join(tables.fmt(v) for v in got))


def run(level: str = "quick", seed: int = 0) -> list:
    cfg = LEVELS[level]
    rng = np.random.default_rng(seed)
    checks = []
    for label in SUPPORTED:
        checks.append(check_algebra(label))
        checks.append(check_separation(label, cfg["M"]))
        checks.append(check_weighted_count(label, cfg["M"]))
        checks.append(check_discrete_orthogonality(label, cfg["M"]))
        checks.append(check_K_identity(label, 200, rng))
        checks.append(check_jacobian(label, 20, rng))
        checks.append(check_injectivity(label, cfg["inj_M"]))
        checks.append(check_exactness(label, (3, 5) if level == "quick" else (3, 5, 8), cfg["R"], 10, rng))
    checks.append(check_table12())
    if level == "full":
        checks.append(check_table3())
        checks.append(check_exact_area())
        checks.append(check_table4())
    return checks


