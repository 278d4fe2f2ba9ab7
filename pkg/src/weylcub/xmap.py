"""The X-transform F -> Omega, the domain Omega and its weight polynomial K."""
from __future__ import annotations

import numpy as np

from .errors import ConsistencyError, StepOutOfRange, UnsupportedAlgebra
from .liealg import AlgebraData, kappa
from .orbitfuncs import TorusFunction, eval_Z, s_function

IMAG_TOL = 1e-10
SLACK = 1e-9


def eval_X(data: AlgebraData, x) -> np.ndarray:
    """Real coordinates (X_1, ..., X_n) of the torus point(s) ``x``.

    A2 recombines the complex-conjugate pair Z_1, Z_2 into real and imaginary
    parts; the other supported algebras have real Z_j which are used as is.
    """
    x = np.asarray(x, dtype=np.float64)
    zs = [np.asarray(eval_Z(data, j, x)) for j in range(1, data.rank + 1)]
    if data.label == "A2":
        z1, z2 = zs
        cols = [(z1 + z2) / 2, (z1 - z2) / 2j]
    else:
        cols = zs
    out = []
    for z in cols:
        scale = np.maximum(1.0, np.abs(z))
        if np.any(np.abs(np.imag(z)) > IMAG_TOL * scale):
            raise ConsistencyError(f"X has an imaginary residue {np.max(np.abs(np.imag(z)))!r}")
        out.append(np.real(z))
    return np.stack(out, axis=-1)


def X_closed_form(label: str, x) -> np.ndarray:
    """Trigonometric closed forms of X, written independently of the orbit sums."""
    a = np.asarray(x, dtype=np.float64)
    tp = 2 * np.pi
    if label == "A1":
        return np.stack([2 * np.cos(tp * a[..., 0])], axis=-1)
    a1, a2 = a[..., 0], a[..., 1]
    if label == "A2":
        y1 = np.cos(tp * a1) + np.cos(tp * a2) + np.cos(tp * (a1 - a2))
        y2 = np.sin(tp * a1) - np.sin(tp * a2) - np.sin(tp * (a1 - a2))
    elif label == "C2":
        y1 = 2 * (np.cos(tp * a1) + np.cos(tp * (a1 - a2)))
        y2 = 2 * (np.cos(tp * a2) + np.cos(tp * (2 * a1 - a2)))
    elif label == "G2":
        y1 = 2 * (np.cos(tp * a1) + np.cos(tp * (a1 - 3 * a2)) + np.cos(tp * (2 * a1 - 3 * a2)))
        y2 = 2 * (np.cos(tp * a2) + np.cos(tp * (a1 - a2)) + np.cos(tp * (a1 - 2 * a2)))
    else:
        raise UnsupportedAlgebra(label)
    return np.stack([y1, y2], axis=-1)


def eval_K(label: str, y):
    """Weight polynomial K with K(X(x)) = |S_rho(x)|^2."""
    y = np.asarray(y, dtype=np.float64)
    if label == "A1":
        return 4.0 - y[..., 0] ** 2
    y1, y2 = y[..., 0], y[..., 1]
    if label == "A2":
        return -((y1**2 + y2**2 + 9) ** 2) + 8 * (y1**3 - 3 * y1 * y2**2) + 108
    if label == "C2":
        return (y1**2 - 4 * y2) * ((y2 + 4) ** 2 - 4 * y1**2)
    if label == "G2":
        return (y2**2 - 4 * y1 - 12) * (y1**2 - 4 * y2**3 + 12 * y1 * y2 + 24 * y1 + 36 * y2 + 36)
    raise UnsupportedAlgebra(label)


def sqrt_K(label: str, y):
    """K^(1/2), with roundoff-negative values on the boundary clipped to zero."""
    return np.sqrt(np.maximum(eval_K(label, y), 0.0))


def in_omega(label: str, y, slack: float = SLACK):
    """Membership in Omega through the explicit boundary inequalities."""
    y = np.asarray(y, dtype=np.float64)
    if label == "A1":
        return np.abs(y[..., 0]) <= 2 + slack
    y1, y2 = y[..., 0], y[..., 1]
    if label == "A2":
        return eval_K(label, y) >= -slack
    if label == "C2":
        return (y2 >= -2 * y1 - 4 - slack) & (y2 >= 2 * y1 - 4 - slack) & (y1**2 / 4 >= y2 - slack)
    if label == "G2":
        # (y2 + 3)^(3/2) only exists for y2 >= -3
        ok = y2 >= -3 - slack
        p = np.where(ok, np.maximum(y2 + 3, 0.0), 0.0) ** 1.5
        lower = -2 * (p + 3 * y2 + 6)
        upper = 2 * (p - 3 * y2 - 6)
        return ok & (y1 >= lower - slack) & (y1 <= upper + slack) & (y1 >= y2**2 / 4 - 3 - slack)
    raise UnsupportedAlgebra(label)


def substitution_scale(data: AlgebraData) -> float:
    """kappa (2 pi)^n / (|F| |W|): the factor turning integrals over F into integrals over Omega."""
    return kappa(data) * (2 * np.pi) ** data.rank / (data.vol_F * data.weyl_order)


def jacobian_abs(data: AlgebraData, x):
    """|det dX/dx| with respect to the Euclidean measure on F."""
    s = s_function(data, data.rho)(np.asarray(x, dtype=np.float64))
    return substitution_scale(data) * np.abs(s)


def numeric_jacobian_abs(data: AlgebraData, x, h: float = 1e-4) -> float:
    """Finite-difference |det dX/dx| at one point, in Euclidean coordinates.

    Uses the fourth-order central stencil in each coroot coordinate; the
    determinant of G2 cancels heavily, so the plain two-point stencil is not
    accurate enough for a 1e-6 relative comparison.
    """
    if not 1e-7 <= h <= 1e-4:
        raise StepOutOfRange(f"step {h} outside [1e-7, 1e-4]")
    x = np.asarray(x, dtype=np.float64)
    n = data.rank
    # derivative with respect to a (coroot coordinates), then to Euclidean x = a @ coroots
    cols = []
    for k in range(n):
        e = np.zeros(n)
        e[k] = h
        cols.append(
            (8 * (eval_X(data, x + e) - eval_X(data, x - e)) - (eval_X(data, x + 2 * e) - eval_X(data, x - 2 * e)))
            / (12 * h)
        )
    d_da = np.stack(cols, axis=-1)
    return abs(np.linalg.det(d_da)) / abs(np.linalg.det(data.coroots))


def pullback(data: AlgebraData, f):
    """Return ``g`` on torus coordinates with ``g = f o X``."""
    if isinstance(f, TorusFunction):
        return f
    return TorusFunction(lambda a: f(eval_X(data, a)), name=getattr(f, "__name__", "f"))


def sqrt_K_function(label: str):
    def f(y):
        return sqrt_K(label, y)

    f.__name__ = "sqrt_K"
    return f


def edge_samples(data: AlgebraData, count: int = 512) -> list:
    """Images under X of the edges of F, i.e. the boundary curves of Omega."""
    from .liealg import coroot_coords

    verts = [np.zeros(data.rank)]
    for i, m in enumerate(data.marks):
        om = [0] * data.rank
        om[i] = 1 / m
        verts.append(np.array([float(v) for v in coroot_coords(data, om)]))
    t = np.linspace(0.0, 1.0, count)[:, None]
    curves = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            pts = verts[i] + t * (verts[j] - verts[i])
            curves.append(eval_X(data, pts))
    return curves
