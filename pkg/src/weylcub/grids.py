"""The point sets F_M: fragments of (1/M) P^vee inside the fundamental simplex."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import InvalidM
from .liealg import AlgebraData, coroot_coords
from .weyl import epsilon


@dataclass(frozen=True)
class GridPoint:
    index: tuple  # (s0, s1, ..., sn)
    omega_coords: tuple  # Fractions s_i / M
    alpha_coords: tuple  # Fractions
    eps: int


@dataclass(frozen=True)
class GridFM:
    algebra: str
    M: int
    points: tuple

    def __len__(self):
        return len(self.points)

    @property
    def alpha_array(self) -> np.ndarray:
        return np.array([[float(v) for v in p.alpha_coords] for p in self.points])

    @property
    def eps_array(self) -> np.ndarray:
        return np.array([p.eps for p in self.points], dtype=np.int64)


def index_set(data: AlgebraData, M: int) -> list:
    """Solutions of s0 + s1 m1 + ... + sn mn = M in lexicographic [s0, ..., sn] order."""
    out = []
    for rest in product(*(range(M // m + 1) for m in data.marks)):
        s0 = M - sum(s * m for s, m in zip(rest, data.marks))
        if s0 >= 0:
            out.append((s0,) + rest)
    out.sort()
    return out


def build_grid(data: AlgebraData, M: int) -> GridFM:
    if not isinstance(M, int) or M < 1:
        raise InvalidM(f"M must be a positive integer, got {M!r}")
    points = []
    for idx in index_set(data, M):
        om = tuple(Fraction(s, M) for s in idx[1:])
        al = coroot_coords(data, om)
        points.append(GridPoint(idx, om, al, epsilon(data, al)))
    return GridFM(data.label, M, tuple(points))


def grid_weighted_count(grid: GridFM) -> int:
    return sum(p.eps for p in grid.points)
