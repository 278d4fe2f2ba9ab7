"""Hot loops: exponential sums at many points.

Two backends implement the same contracts. The numba one is used when numba
imports and ``WEYLCUB_DISABLE_NUMBA`` is unset (or ``0``); otherwise the pure
numpy one. Both reduce the phase ``<nu, a>`` modulo 1 before scaling by 2*pi
and accumulate with Kahan compensation in a fixed term order, so each backend
is deterministic. Across backends results agree to roundoff only.
"""
from __future__ import annotations

import os

import numpy as np

TWO_PI = 2.0 * np.pi

try:  # pragma: no cover - exercised implicitly
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def decorator(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return decorator


def _flag_disabled() -> bool:
    return os.environ.get("WEYLCUB_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _flag_disabled()
BACKEND = "numba" if USE_NUMBA else "numpy"


# --------------------------------------------------------------------------
# numpy backend

def expsum_numpy(points, freqs, coefs):
    """out[p] = sum_k coefs[k] * exp(2 pi i <freqs[k], points[p]>)."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    freqs = np.ascontiguousarray(freqs, dtype=np.int64)
    coefs = np.ascontiguousarray(coefs, dtype=np.complex128)
    n_pts = points.shape[0]
    re = np.zeros(n_pts)
    im = np.zeros(n_pts)
    cre = np.zeros(n_pts)
    cim = np.zeros(n_pts)
    for k in range(freqs.shape[0]):
        t = points @ freqs[k].astype(np.float64)
        t -= np.round(t)
        c = np.cos(TWO_PI * t)
        s = np.sin(TWO_PI * t)
        cr, ci = coefs[k].real, coefs[k].imag
        # Kahan on both parts
        y = (cr * c - ci * s) - cre
        tot = re + y
        cre = (tot - re) - y
        re = tot
        y = (cr * s + ci * c) - cim
        tot = im + y
        cim = (tot - im) - y
        im = tot
    return re + 1j * im


def expsum_adjoint_numpy(points, freqs, weights):
    """out[k] = sum_p weights[p] * exp(-2 pi i <freqs[k], points[p]>)."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    freqs = np.ascontiguousarray(freqs, dtype=np.int64)
    weights = np.ascontiguousarray(weights, dtype=np.complex128)
    out = np.empty(freqs.shape[0], dtype=np.complex128)
    for k in range(freqs.shape[0]):
        t = points @ freqs[k].astype(np.float64)
        t -= np.round(t)
        c = np.cos(TWO_PI * t)
        s = -np.sin(TWO_PI * t)
        terms_re = weights.real * c - weights.imag * s
        terms_im = weights.real * s + weights.imag * c
        out[k] = _fsum(terms_re) + 1j * _fsum(terms_im)
    return out


def _fsum(x):
    # exactly rounded, so no separate compensation needed
    import math

    return math.fsum(x.tolist())


# --------------------------------------------------------------------------
# numba backend

@njit(cache=True)
def _expsum_nb(points, freqs, coefs):
    n_pts, dim = points.shape
    n_terms = freqs.shape[0]
    out = np.empty(n_pts, dtype=np.complex128)
    for p in range(n_pts):
        re = 0.0
        im = 0.0
        cre = 0.0
        cim = 0.0
        for k in range(n_terms):
            t = 0.0
            for d in range(dim):
                t += freqs[k, d] * points[p, d]
            t -= np.round(t)
            c = np.cos(TWO_PI * t)
            s = np.sin(TWO_PI * t)
            cr = coefs[k].real
            ci = coefs[k].imag
            y = (cr * c - ci * s) - cre
            tot = re + y
            cre = (tot - re) - y
            re = tot
            y = (cr * s + ci * c) - cim
            tot = im + y
            cim = (tot - im) - y
            im = tot
        out[p] = complex(re, im)
    return out


@njit(cache=True)
def _expsum_adjoint_nb(points, freqs, weights):
    n_pts, dim = points.shape
    n_terms = freqs.shape[0]
    out = np.empty(n_terms, dtype=np.complex128)
    for k in range(n_terms):
        re = 0.0
        im = 0.0
        cre = 0.0
        cim = 0.0
        for p in range(n_pts):
            t = 0.0
            for d in range(dim):
                t += freqs[k, d] * points[p, d]
            t -= np.round(t)
            c = np.cos(TWO_PI * t)
            s = -np.sin(TWO_PI * t)
            wr = weights[p].real
            wi = weights[p].imag
            y = (wr * c - wi * s) - cre
            tot = re + y
            cre = (tot - re) - y
            re = tot
            y = (wr * s + wi * c) - cim
            tot = im + y
            cim = (tot - im) - y
            im = tot
        out[k] = complex(re, im)
    return out


def expsum_numba(points, freqs, coefs):
    return _expsum_nb(
        np.ascontiguousarray(points, dtype=np.float64),
        np.ascontiguousarray(freqs, dtype=np.int64),
        np.ascontiguousarray(coefs, dtype=np.complex128),
    )


def expsum_adjoint_numba(points, freqs, weights):
    return _expsum_adjoint_nb(
        np.ascontiguousarray(points, dtype=np.float64),
        np.ascontiguousarray(freqs, dtype=np.int64),
        np.ascontiguousarray(weights, dtype=np.complex128),
    )


if USE_NUMBA:
    expsum = expsum_numba
    expsum_adjoint = expsum_adjoint_numba
else:
    expsum = expsum_numpy
    expsum_adjoint = expsum_adjoint_numpy


# --------------------------------------------------------------------------
# lattice evaluation (BLAS, backend independent)

def expsum_lattice(origin, steps, shape, freqs, coefs):
    """Evaluate an exponential sum on ``origin + i*steps[0] + j*steps[1]``.

    Returns the full ``shape`` array. The sum factorizes through two phase
    tables, so the cost is one complex matrix product instead of a
    per-point loop.
    """
    origin = np.asarray(origin, dtype=np.float64)
    steps = np.asarray(steps, dtype=np.float64)
    freqs = np.asarray(freqs, dtype=np.int64)
    coefs = np.asarray(coefs, dtype=np.complex128)
    ff = freqs.astype(np.float64)
    base = ff @ origin
    base -= np.round(base)
    scaled = coefs * np.exp(1j * TWO_PI * base)
    if steps.shape[0] == 1:
        e0 = _phase_table(shape[0], ff @ steps[0])
        return e0 @ scaled
    e0 = _phase_table(shape[0], ff @ steps[0])
    e1 = _phase_table(shape[1], ff @ steps[1])
    return (e0 * scaled) @ e1.T


def _phase_table(count, rate):
    t = np.outer(np.arange(count, dtype=np.float64), rate)
    t -= np.round(t)
    return np.exp(1j * TWO_PI * t)
