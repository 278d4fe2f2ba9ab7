"""Symmetric and antisymmetric orbit functions and their sums over grids.

Torus points are alpha^vee coordinates, so for a weight ``nu`` in omega
coordinates the pairing <nu, x> is ``nu @ a``. Inputs may be a single point of
shape ``(n,)`` or a batch of shape ``(..., n)``.
"""
from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import NonDominantLabel, NonStrictlyDominantLabel
from .grids import GridFM
from .liealg import AlgebraData
from .weyl import group_elements, orbit


class TorusFunction:
    """A callable of alpha^vee coordinates, standing in for a function on Omega.

    Anything that accepts functions on Omega (cubature, approximation) also
    accepts one of these and evaluates it at the torus point instead of at
    its image under X. This is how the polynomials p_lambda are handled
    without ever inverting X.
    """

    def __init__(self, func, name=None):
        self.func = func
        self.name = name or getattr(func, "__name__", "g")

    def __call__(self, a):
        return self.func(np.asarray(a, dtype=np.float64))

    def __repr__(self):
        return f"TorusFunction({self.name})"


class TrigPoly(TorusFunction):
    """``sum_k coefs[k] * exp(2 pi i <freqs[k], x>)`` with integer frequencies."""

    def __init__(self, freqs, coefs, name="trig"):
        freqs = np.asarray(freqs, dtype=np.int64)
        self.freqs = freqs.reshape(len(coefs), -1) if freqs.ndim != 2 else freqs
        self.coefs = np.asarray(coefs, dtype=np.complex128)
        self.name = name

    def __call__(self, a):
        a = np.asarray(a, dtype=np.float64)
        flat = a.reshape(-1, self.freqs.shape[1])
        out = _kernels.expsum(flat, self.freqs, self.coefs)
        return out.reshape(a.shape[:-1]) if a.ndim > 1 else out[0]

    def on_lattice(self, origin, steps, shape):
        return _kernels.expsum_lattice(origin, steps, shape, self.freqs, self.coefs)

    def __len__(self):
        return len(self.coefs)


def _check_dominant(lam):
    if any(x < 0 for x in lam):
        raise NonDominantLabel(f"label {tuple(lam)} is not dominant")


def c_function(data: AlgebraData, lam) -> TrigPoly:
    """C_lambda as a trigonometric polynomial (orbit sum, no 1/h prefactor)."""
    _check_dominant(lam)
    orb = orbit(data, lam)
    return TrigPoly(orb, np.ones(len(orb)), name=f"C{tuple(lam)}")


def s_function(data: AlgebraData, lam) -> TrigPoly:
    if any(x < 1 for x in lam):
        raise NonStrictlyDominantLabel(f"label {tuple(lam)} is not strictly dominant")
    lam = np.asarray(lam, dtype=np.int64)
    elems = group_elements(data)
    freqs = np.array([lam @ g for g, _ in elems])
    signs = np.array([float(s) for _, s in elems])
    return TrigPoly(freqs, signs, name=f"S{tuple(lam.tolist())}")


def eval_C(data: AlgebraData, lam, x):
    return c_function(data, lam)(x)


def eval_S(data: AlgebraData, lam, x):
    return s_function(data, lam)(x)


def eval_Z(data: AlgebraData, j: int, x):
    """Z_j = C at the j-th fundamental weight (1-based)."""
    return eval_C(data, data.fundamental_weight(j), x)


def combination(data: AlgebraData, coeffs: dict) -> TrigPoly:
    """``sum_lam coeffs[lam] * C_lam`` flattened into one trigonometric polynomial."""
    freqs, vals = [], []
    for lam in sorted(coeffs):
        _check_dominant(lam)
        orb = orbit(data, lam)
        freqs.extend(orb)
        vals.extend([coeffs[lam]] * len(orb))
    if not freqs:
        return TrigPoly(np.zeros((0, data.rank), dtype=np.int64), np.zeros(0), name="zero")
    return TrigPoly(freqs, vals, name="combination")


def conj_c_sums(data: AlgebraData, lams, points, weights) -> np.ndarray:
    """For each label, ``sum_p weights[p] * conj(C_lam(points[p]))``."""
    orbs = [orbit(data, lam) for lam in lams]
    freqs = np.array([nu for orb in orbs for nu in orb], dtype=np.int64).reshape(-1, data.rank)
    per_freq = _kernels.expsum_adjoint(points, freqs, weights)
    out = np.empty(len(lams), dtype=np.complex128)
    start = 0
    for k, orb in enumerate(orbs):
        chunk = per_freq[start:start + len(orb)]
        out[k] = complex(math.fsum(chunk.real), math.fsum(chunk.imag))
        start += len(orb)
    return out


def discrete_sum(data: AlgebraData, lam, grid: GridFM) -> complex:
    """sum over F_M of eps(x) C_lam(x)."""
    vals = eval_C(data, lam, grid.alpha_array) * grid.eps_array
    return complex(math.fsum(vals.real), math.fsum(vals.imag))
