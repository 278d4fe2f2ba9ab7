"""Polynomial approximation in L^2_K(Omega) by the polynomials p_lambda.

Every p_lambda(y) is evaluated as C_lambda(x) at the torus point with
y = X(x), and integrals over Omega are pulled back to F.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import build_grid
from .liealg import AlgebraData, enumerate_dominant
from .orbitfuncs import TrigPoly, combination, conj_c_sums
from .refquad import build_refgrid, centroid_sum, evaluate_on, richardson
from .weyl import stabilizer_order
from .xmap import pullback, substitution_scale

SIGMA = 0.35
CENTER = (0.0, -1.8)


@dataclass(frozen=True)
class ApproxCoeffs:
    algebra: str
    M: int
    coeffs: dict  # weight tuple -> complex

    def trig(self, data: AlgebraData) -> TrigPoly:
        return combination(data, self.coeffs)


def coeffs_v(data: AlgebraData, M: int, f) -> ApproxCoeffs:
    """Coefficients of v_M[f], computed with the cubature rule on F_M."""
    grid = build_grid(data, M)
    pts = grid.alpha_array
    fx = np.asarray(pullback(data, f)(pts), dtype=np.complex128)
    lams = enumerate_dominant(data, M)
    sums = conj_c_sums(data, lams, pts, grid.eps_array * fx)
    norm = data.c * data.weyl_order * M**data.rank
    return ApproxCoeffs(
        data.label, M, {lam: stabilizer_order(data, lam) * s / norm for lam, s in zip(lams, sums)}
    )


def coeffs_u(data: AlgebraData, M: int, f, R: int = 128) -> ApproxCoeffs:
    """Coefficients of the optimal u_M[f]: h_lambda (f, p_lambda)_K by reference quadrature."""
    if R < 64:
        raise ValueError("R must be at least 64")
    g = pullback(data, f)
    lams = enumerate_dominant(data, M)
    estimates = []
    for grid in (build_refgrid(data, R), build_refgrid(data, 2 * R)):
        fx = np.asarray(evaluate_on(grid, g), dtype=np.complex128)
        estimates.append(conj_c_sums(data, lams, grid.points, fx) * grid.weights[0])
    integrals = [richardson(c, fn).value for c, fn in zip(*estimates)]
    scale = data.vol_F * data.weyl_order
    return ApproxCoeffs(
        data.label, M, {lam: stabilizer_order(data, lam) * v / scale for lam, v in zip(lams, integrals)}
    )


def eval_approx(data: AlgebraData, coeffs: ApproxCoeffs, x, real: bool = False):
    """sum a_lambda C_lambda(x); with ``real=True`` the imaginary residue is checked and dropped."""
    vals = coeffs.trig(data)(np.asarray(x, dtype=np.float64))
    if real:
        resid = np.max(np.abs(np.imag(vals))) if np.size(vals) else 0.0
        if resid > 1e-10 * max(1.0, float(np.max(np.abs(vals)))):
            raise ValueError(f"approximant is not real (imaginary residue {resid:.3e})")
        return np.real(vals)
    return vals


def error_L2K(data: AlgebraData, f, coeffs: ApproxCoeffs, R: int = 1024, threads: int = 1) -> float:
    """Integral over Omega of |f - approximant|^2 K^(-1/2), via reference quadrature."""
    if R < 256:
        raise ValueError("R must be at least 256")
    g = pullback(data, f)
    approx = coeffs.trig(data)
    sums = []
    for grid in (build_refgrid(data, R), build_refgrid(data, 2 * R)):
        diff = evaluate_on(grid, g, threads) - evaluate_on(grid, approx)
        sums.append(centroid_sum(grid, np.abs(diff) ** 2))
    return float(substitution_scale(data) * richardson(*sums).value)


def gaussian_model(y, center=CENTER, sigma: float = SIGMA):
    """exp(-|y - center|^2 / (2 sigma^2)); the default is the C2 example model."""
    y = np.asarray(y, dtype=np.float64)
    c = np.asarray(center, dtype=np.float64)[: y.shape[-1]]
    r2 = np.sum((y - c) ** 2, axis=-1)
    return np.exp(-r2 / (2 * sigma**2))
