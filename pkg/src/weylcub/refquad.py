"""Reference quadrature over the fundamental simplex F.

The simplex is mapped to the standard simplex ``{t >= 0, sum t <= 1}`` via
``t_i = m_i * y_i`` (``y`` the omega^vee coordinates), cut into ``R^n``
congruent cells, and each cell is integrated by its centroid. For rank 2 the
cells are the "up" and "down" triangles, whose centroids form two triangular
pieces of lattices; that structure is kept so trigonometric polynomials can
be evaluated by matrix products instead of point by point.

The centroid rule has an error expansion in even powers of 1/R, so one
Richardson step between R and 2R removes the leading term.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .liealg import AlgebraData
from .orbitfuncs import TrigPoly
from .xmap import pullback, substitution_scale


@dataclass(frozen=True)
class LatticeBlock:
    """Points ``origin + i*steps[0] + j*steps[1]`` with ``i + j <= limit``."""

    origin: np.ndarray
    steps: np.ndarray
    limit: int

    @property
    def shape(self):
        return (self.limit + 1,) * len(self.steps)

    def mask(self):
        if len(self.steps) == 1:
            return np.ones(self.limit + 1, dtype=bool)
        i, j = np.indices(self.shape)
        return i + j <= self.limit


@dataclass(frozen=True, eq=False)
class RefGrid:
    R: int
    points: np.ndarray  # (N, n) alpha^vee coordinates
    weights: np.ndarray  # (N,), all equal
    blocks: tuple

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.weights))


@dataclass(frozen=True)
class RefResult:
    value: complex | float
    error: float
    coarse: complex | float
    fine: complex | float


def _t_to_alpha(data: AlgebraData) -> np.ndarray:
    """Matrix ``T`` with alpha coords = t @ T."""
    b = np.array([[float(v) for v in row] for row in data.omega_in_coroot_basis])
    return np.diag(1.0 / np.asarray(data.marks, dtype=float)) @ b


def build_refgrid(data: AlgebraData, R: int) -> RefGrid:
    if R < 1:
        raise ValueError("R must be positive")
    T = _t_to_alpha(data)
    n = data.rank
    cell = data.vol_F / R**n
    blocks = []
    if n == 1:
        blocks.append(LatticeBlock(np.array([0.5 / R]) @ T, T / R, R - 1))
    elif n == 2:
        steps = T / R
        blocks.append(LatticeBlock(np.array([1 / 3, 1 / 3]) / R @ T, steps, R - 1))
        if R >= 2:
            blocks.append(LatticeBlock(np.array([2 / 3, 2 / 3]) / R @ T, steps, R - 2))
    else:
        raise NotImplementedError("reference quadrature is implemented for rank <= 2")
    pts = [block_points(b) for b in blocks]
    points = np.concatenate(pts)
    return RefGrid(R, points, np.full(len(points), cell), tuple(blocks))


def block_points(block: LatticeBlock) -> np.ndarray:
    idx = np.indices(block.shape).reshape(len(block.steps), -1).T
    keep = block.mask().reshape(-1)
    return block.origin + idx[keep] @ block.steps


def evaluate_on(grid: RefGrid, g, threads: int = 1) -> np.ndarray:
    """Values of ``g`` at the grid points, in ``grid.points`` order."""
    if isinstance(g, TrigPoly):
        return np.concatenate([g.on_lattice(b.origin, b.steps, b.shape)[b.mask()] for b in grid.blocks])
    return map_chunks(g, grid.points, threads, chunk=1 << 16)


def centroid_sum(grid: RefGrid, values) -> complex | float:
    values = np.asarray(values)
    total = np.sum(values, dtype=values.dtype if np.iscomplexobj(values) else np.float64)
    return total * grid.weights[0]


def richardson(coarse, fine, order: int = 2) -> RefResult:
    factor = 2**order
    value = (factor * fine - coarse) / (factor - 1)
    return RefResult(value, float(abs(fine - coarse)) / (factor - 1), coarse, fine)


def ref_integral_F(data: AlgebraData, g, R: int = 256, threads: int = 1) -> RefResult:
    """Integral of ``g`` over F (Euclidean measure), extrapolated from R and 2R.

    ``g`` takes alpha^vee coordinates of shape ``(N, n)``. ``error`` is the
    size of the removed leading term, a conservative bound for smooth ``g``.
    """
    if R < 16:
        raise ValueError("R must be at least 16")
    sums = [centroid_sum(grid, evaluate_on(grid, g, threads)) for grid in (build_refgrid(data, R), build_refgrid(data, 2 * R))]
    return richardson(*sums)


def ref_integral_Omega_weighted(data: AlgebraData, f, R: int = 256, threads: int = 1) -> RefResult:
    """Integral of f K^(-1/2) over Omega, by substitution y = X(x)."""
    res = ref_integral_F(data, pullback(data, f), R, threads)
    s = substitution_scale(data)
    return RefResult(s * res.value, s * res.error, s * res.coarse, s * res.fine)
