"""Weyl group actions on weights and on the torus R^n / Q^vee."""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Integral

import numpy as np

from .errors import InexactPoint
from .liealg import AlgebraData


def reflect(data: AlgebraData, i: int, lam) -> tuple:
    """Simple reflection r_i on a weight in omega coordinates (1-based ``i``)."""
    row = data.cartan[i - 1]
    li = lam[i - 1]
    return tuple(int(x - li * c) for x, c in zip(lam, row))


@lru_cache(maxsize=4096)
def _orbit(data: AlgebraData, lam: tuple) -> tuple:
    seen = {lam}
    queue = deque([lam])
    while queue:
        v = queue.popleft()
        for i in range(1, data.rank + 1):
            w = reflect(data, i, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen))


def orbit(data: AlgebraData, lam) -> tuple:
    """The W-orbit of ``lam`` as a sorted tuple of weights."""
    return _orbit(data, tuple(int(x) for x in lam))


def stabilizer_order(data: AlgebraData, lam) -> int:
    return data.weyl_order // len(orbit(data, lam))


@lru_cache(maxsize=None)
def group_elements(data: AlgebraData) -> tuple:
    """All elements of W as integer matrices acting on row vectors of omega coordinates.

    Returns a tuple of ``(matrix, det)`` in breadth-first order of word
    length; ``det`` is the sign of the element.
    """
    n = data.rank
    gens = []
    for i in range(n):
        g = np.eye(n, dtype=np.int64)
        g[i] -= np.asarray(data.cartan[i], dtype=np.int64)
        gens.append(g)
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes(): (ident, 1)}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        sign = seen[g.tobytes()][1]
        for r in gens:
            h = g @ r
            key = h.tobytes()
            if key not in seen:
                seen[key] = (h, -sign)
                queue.append(h)
    elems = tuple(seen.values())
    if len(elems) != data.weyl_order:
        raise AssertionError(f"generated {len(elems)} elements, expected {data.weyl_order}")
    return elems


def reflect_point(data: AlgebraData, i: int, a):
    """Simple reflection on a torus point given in alpha^vee coordinates."""
    row = data.cartan[i - 1]
    s = sum(c * x for c, x in zip(row, a))
    out = list(a)
    out[i - 1] = a[i - 1] - s
    return tuple(out)


def _as_exact(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Integral):
        return Fraction(int(x))
    raise InexactPoint(f"epsilon needs exact rational coordinates, got {type(x).__name__}")


def epsilon(data: AlgebraData, x) -> int:
    """Size of the W-orbit of the torus point ``x`` (alpha^vee coordinates).

    Coordinates are put over a common denominator and the closure is run on
    integer numerators modulo that denominator, which is exact.
    """
    coords = [_as_exact(v) for v in x]
    den = lcm(*(v.denominator for v in coords))
    return _epsilon_int(data, tuple(int(v * den) % den for v in coords), den)


@lru_cache(maxsize=1 << 16)
def _epsilon_int(data: AlgebraData, start: tuple, den: int) -> int:
    cartan = data.cartan
    n = data.rank
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for i in range(n):
            s = sum(cartan[i][k] * v[k] for k in range(n))
            w = list(v)
            w[i] = (v[i] - s) % den
            w = tuple(w)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen)
