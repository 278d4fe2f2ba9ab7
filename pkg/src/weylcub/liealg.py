"""Root-system data for the supported simple Lie algebras.

Everything lattice-valued is kept in exact arithmetic (ints and
``fractions.Fraction``); floats appear only in the Euclidean realization of
the roots and in derived volumes.

Conventions
-----------
* Weights are integer vectors in the fundamental-weight (omega) basis.
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` of the Cartan
  matrix is ``alpha_i`` written in the omega basis.
* Torus points are written in the simple-coroot (alpha^vee) basis; the pairing
  of a weight with a torus point is then the plain dot product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import UnsupportedAlgebra

CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -3), (-1, 2)),
}

SUPPORTED = tuple(CARTAN)

Matrix = tuple  # tuple of row tuples


@dataclass(frozen=True, eq=False)
class AlgebraData:
    label: str
    rank: int
    cartan: Matrix
    gram: Matrix  # Fractions
    simple_roots: np.ndarray  # rows, orthonormal coordinates
    coroots: np.ndarray  # rows
    marks: tuple
    dual_marks: tuple
    coxeter_number: int
    c: int
    weyl_order: int
    omega_in_coroot_basis: Matrix  # B, with omega^vee_i = sum_k B[i][k] alpha^vee_k
    vol_F: float
    positive_roots: tuple  # omega coordinates

    @property
    def rho(self) -> tuple:
        return (1,) * self.rank

    def fundamental_weight(self, j: int) -> tuple:
        """omega_j for 1 <= j <= rank."""
        return tuple(int(k == j - 1) for k in range(self.rank))


# --------------------------------------------------------------------------
# exact linear algebra on tuples of Fractions

def _frac_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _transpose(m):
    return tuple(zip(*m))


def _matmul(a, b):
    bt = _transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return sum((-1) ** j * m[0][j] * _det(tuple(row[:j] + row[j + 1:] for row in m[1:])) for j in range(n))


def _inverse(m):
    """Gauss-Jordan over Fractions."""
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _vecmat(v, m):
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


# --------------------------------------------------------------------------

def _root_lengths(cartan):
    """Squared lengths <alpha_i, alpha_i>, longest normalized to 2.

    Uses C_ij d_j = C_ji d_i (d_i = |alpha_i|^2 / 2), propagated along the
    connected Dynkin diagram.
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i, j in product(range(n), repeat=2):
            if d[i] is not None and d[j] is None and cartan[i][j] != 0:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                changed = True
    top = max(d)
    return tuple(2 * x / top for x in d)


def _close_roots(cartan):
    """All roots, in omega coordinates, by closing the simple roots under reflections."""
    n = len(cartan)
    simple = [tuple(row) for row in cartan]
    seen = set(simple)
    stack = list(simple)
    while stack:
        v = stack.pop()
        for i in range(n):
            w = tuple(v[k] - v[i] * cartan[i][k] for k in range(n))
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _highest_root_coeffs(cartan):
    """Coefficients of the highest root in the simple-root basis.

    Brute force: among all roots expressed in the alpha basis, the positive
    ones are those with nonnegative coefficients, and the highest root is the
    unique positive root dominating every other one.
    """
    cinv = _inverse(cartan)
    roots = [_vecmat(r, cinv) for r in _close_roots(cartan)]
    positive = [r for r in roots if all(x >= 0 for x in r)]
    top = max(positive, key=sum)
    for r in positive:
        if not all(t >= x for t, x in zip(top, r)):
            raise AssertionError("highest root is not unique")
    return tuple(int(x) for x in top), positive


def _cholesky_rows(gram):
    g = np.array([[float(x) for x in row] for row in gram])
    return np.linalg.cholesky(g)  # rows realize the Gram matrix


@lru_cache(maxsize=None)
def build_algebra(label: str) -> AlgebraData:
    """Assemble and self-check the data of ``label`` in {A1, A2, C2, G2}."""
    if label not in CARTAN:
        raise UnsupportedAlgebra(f"unsupported algebra {label!r}; expected one of {SUPPORTED}")
    cartan = CARTAN[label]
    n = len(cartan)
    lengths = _root_lengths(cartan)
    gram = tuple(tuple(cartan[i][j] * lengths[j] / 2 for j in range(n)) for i in range(n))

    marks, positive = _highest_root_coeffs(cartan)
    dual_marks, _ = _highest_root_coeffs(_transpose(cartan))
    c = int(_det(_frac_matrix(cartan)))
    weyl_order = math.factorial(n) * math.prod(marks) * c
    b = _transpose(_inverse(cartan))  # C^{-T}

    roots = _cholesky_rows(gram)
    coroots = np.array([2 * roots[i] / float(lengths[i]) for i in range(n)])
    vol_F = abs(np.linalg.det(coroots)) / weyl_order

    pos_omega = tuple(sorted(_vecmat(r, _frac_matrix(cartan)) for r in positive))
    pos_omega = tuple(tuple(int(x) for x in r) for r in pos_omega)

    return AlgebraData(
        label=label,
        rank=n,
        cartan=cartan,
        gram=gram,
        simple_roots=roots,
        coroots=coroots,
        marks=marks,
        dual_marks=dual_marks,
        coxeter_number=1 + sum(marks),
        c=c,
        weyl_order=weyl_order,
        omega_in_coroot_basis=b,
        vol_F=vol_F,
        positive_roots=pos_omega,
    )


def m_degree(data: AlgebraData, lam) -> int:
    """Pairing of ``lam`` with the highest dual root."""
    return sum(int(x) * m for x, m in zip(lam, data.dual_marks))


def enumerate_dominant(data: AlgebraData, M: int) -> list:
    """Dominant weights of m-degree at most ``M``, lexicographically sorted."""
    ranges = [range(M // m + 1) for m in data.dual_marks]
    return [lam for lam in product(*ranges) if m_degree(data, lam) <= M]


def weight_in_MQ(data: AlgebraData, lam, M: int) -> bool:
    """Whether ``lam`` lies in ``M`` times the root lattice."""
    k = _vecmat(tuple(Fraction(x, M) for x in lam), _inverse(data.cartan))
    return all(x.denominator == 1 for x in k)


def coroot_coords(data: AlgebraData, omega_vee_coords):
    """Convert omega^vee coordinates to alpha^vee coordinates exactly."""
    return _vecmat(tuple(Fraction(x) for x in omega_vee_coords), data.omega_in_coroot_basis)


def omega_vee_vectors(data: AlgebraData) -> np.ndarray:
    b = np.array([[float(x) for x in row] for row in data.omega_in_coroot_basis])
    return b @ data.coroots


def highest_dual_root(data: AlgebraData) -> np.ndarray:
    return np.asarray(data.dual_marks, dtype=float) @ data.coroots


def kappa(data: AlgebraData) -> float:
    """Jacobian of the real recombination of the Z_j."""
    if data.label.startswith("A"):
        return 2.0 ** (-(data.rank // 2))
    return 1.0
