import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcub.approx import (
    ApproxCoeffs,
    coeffs_u,
    coeffs_v,
    error_L2K,
    eval_approx,
    gaussian_model,
)
from weylcub.liealg import SUPPORTED, build_algebra, enumerate_dominant, m_degree
from weylcub.orbitfuncs import TorusFunction, c_function, combination


def one(y):
    return np.ones(len(y))


def zero(y):
    return np.zeros(len(y))


def test_gaussian_model():
    assert gaussian_model(np.array([[0.0, -1.8]]))[0] == 1
    assert gaussian_model(np.array([[0.35, -1.8]]))[0] == pytest.approx(np.exp(-0.5))
    assert gaussian_model(np.array([[4.0, 4.0]]))[0] < 1e-10
    assert gaussian_model(np.array([[0.1]]), center=(0.1,))[0] == 1


@pytest.mark.parametrize("label", SUPPORTED)
def test_v_of_constants(label):
    d = build_algebra(label)
    co = coeffs_v(d, 6, one).coeffs
    assert co[(0,) * d.rank] == pytest.approx(1, abs=1e-12)
    assert max(abs(v) for lam, v in co.items() if any(lam)) < 1e-12
    assert all(v == 0 for v in coeffs_v(d, 6, zero).coeffs.values())


@pytest.mark.parametrize("label", SUPPORTED)
@settings(max_examples=15)
@given(M=st.integers(1, 9), data=st.data())
def test_v_recovers_low_degree_orbit_functions(label, M, data):
    d = build_algebra(label)
    mu = data.draw(st.sampled_from(enumerate_dominant(d, M - 1)))
    co = coeffs_v(d, M, c_function(d, mu))
    for lam, a in co.coeffs.items():
        assert abs(a - (lam == mu)) < 1e-12
    x = np.random.default_rng(M).random((5, d.rank))
    assert np.allclose(eval_approx(d, co, x), c_function(d, mu)(x), atol=1e-10)


def test_eval_approx_constant():
    d = build_algebra("G2")
    co = ApproxCoeffs("G2", 1, {(0, 0): 1.0})
    assert np.allclose(eval_approx(d, co, np.random.default_rng(0).random((4, 2))), 1)


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_u_recovers_orbit_functions(label):
    d = build_algebra(label)
    mu = (1, 1)
    M = m_degree(d, mu)
    co = coeffs_u(d, M, c_function(d, mu))
    for lam, a in co.coeffs.items():
        assert abs(a - (lam == mu)) < 1e-6
    co0 = coeffs_u(d, M, one)
    for lam, a in co0.coeffs.items():
        assert abs(a - (not any(lam))) < 1e-6


def test_u_equals_v_on_low_degree():
    d = build_algebra("C2")
    M = 5
    rng = np.random.default_rng(2)
    lams = enumerate_dominant(d, M - 1)
    p = combination(d, {lam: complex(*rng.standard_normal(2)) for lam in lams})
    v = coeffs_v(d, M, p).coeffs
    u = coeffs_u(d, M, p).coeffs
    assert max(abs(v[lam] - u[lam]) for lam in v) < 1e-6


def test_error_vanishes_for_representable_functions():
    d = build_algebra("A2")
    co = coeffs_v(d, 3, c_function(d, (0, 0)))
    assert error_L2K(d, c_function(d, (0, 0)), co, R=256) < 1e-12


def test_error_decreases_with_M():
    d = build_algebra("C2")
    errs = [error_L2K(d, gaussian_model, coeffs_v(d, M, gaussian_model), R=256) for M in (4, 8, 12)]
    assert errs[0] > errs[1] > errs[2]


def test_real_output_check():
    d = build_algebra("C2")
    co = coeffs_v(d, 8, gaussian_model)
    vals = eval_approx(d, co, np.random.default_rng(1).random((10, 2)), real=True)
    assert vals.dtype == np.float64
    bad = ApproxCoeffs("A2", 1, {(1, 0): 1.0})
    with pytest.raises(ValueError):
        eval_approx(build_algebra("A2"), bad, np.array([[0.1, 0.3]]), real=True)


def test_R_guards():
    d = build_algebra("A2")
    with pytest.raises(ValueError):
        coeffs_u(d, 2, one, R=32)
    with pytest.raises(ValueError):
        error_L2K(d, one, coeffs_v(d, 2, one), R=128)
