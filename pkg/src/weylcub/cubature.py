"""Cubature rules on Omega with nodes X(F_M), exact on polynomials of m-degree <= 2M - 1."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .grids import GridFM, build_grid
from .liealg import AlgebraData, kappa
from .orbitfuncs import TorusFunction
from .xmap import eval_X


@dataclass(frozen=True)
class CubatureNode:
    index: tuple
    x: tuple  # alpha^vee coordinates (Fractions)
    y: tuple  # node in Omega
    eps: int
    weight: float


@dataclass(frozen=True, eq=False)
class CubatureRule:
    algebra: str
    M: int
    prefactor: float
    nodes: tuple
    grid: GridFM

    def __len__(self):
        return len(self.nodes)

    @property
    def y(self) -> np.ndarray:
        return np.array([n.y for n in self.nodes])

    @property
    def x(self) -> np.ndarray:
        return self.grid.alpha_array

    @property
    def weights(self) -> np.ndarray:
        return np.array([n.weight for n in self.nodes])

    @property
    def eps(self) -> np.ndarray:
        return self.grid.eps_array


def rule_prefactor(data: AlgebraData, M: int) -> float:
    """kappa / (c |W|) * (2 pi / M)^n."""
    return kappa(data) / (data.c * data.weyl_order) * (2 * math.pi / M) ** data.rank


def build_rule(data: AlgebraData, M: int) -> CubatureRule:
    grid = build_grid(data, M)
    pref = rule_prefactor(data, M)
    ys = eval_X(data, grid.alpha_array)
    nodes = tuple(
        CubatureNode(p.index, p.alpha_coords, tuple(float(v) for v in y), p.eps, pref * p.eps)
        for p, y in zip(grid.points, ys)
    )
    return CubatureRule(data.label, M, pref, nodes, grid)


def _fsum_complex(vals):
    vals = np.asarray(vals)
    if np.iscomplexobj(vals):
        re = math.fsum(vals.real.tolist())
        im = math.fsum(vals.imag.tolist())
        return complex(re, im) if im != 0.0 else re
    return math.fsum(vals.tolist())


def integrate(rule: CubatureRule, f, threads: int = 1):
    """Sum of w_j f(y_j).

    ``f`` maps an ``(N, n)`` array of Omega points to ``N`` values; a
    ``TorusFunction`` is evaluated at the grid points instead. The reduction
    is exactly rounded, so the result does not depend on ``threads``.
    """
    if isinstance(f, TorusFunction):
        return integrate_pullback(rule, f, threads=threads)
    vals = map_chunks(f, rule.y, threads)
    return _fsum_complex(rule.weights * vals)


def integrate_pullback(rule: CubatureRule, g, threads: int = 1):
    """prefactor * sum_j eps_j g(x_j) for ``g`` given on torus coordinates."""
    vals = map_chunks(g, rule.x, threads)
    return _fsum_complex(rule.weights * vals)
