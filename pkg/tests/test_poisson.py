import math

import numpy as np
import pytest

from slicereg.poisson import (
    MODES,
    BoundaryFunction,
    BoundaryTooClose,
    harmonic_defect,
    modulus_boundary_function,
    poisson_integral,
    poisson_integral_slice,
    rotation_equivariance_residual,
    star_kernel_bound,
)
from slicereg.quaternion import (
    ONE,
    UNIT_E1,
    UNIT_E2,
    UNIT_E3,
    E1,
    E2,
    ImaginaryUnit,
    Quaternion,
    slice_point,
)
from slicereg.series import SliceSeries


def test_constant_reproduces_exactly():
    one = BoundaryFunction.constant(1.0)
    for r in (0.0, 0.5, 0.9):
        q = slice_point(UNIT_E1, r + 0.0j)
        assert abs(poisson_integral(one, q, UNIT_E1) - 1.0) < 1e-12
    # slice form, complex evaluation points
    zs = np.array([0.0, 0.3 + 0.4j, -0.7j])
    vals = poisson_integral_slice(lambda t: np.ones_like(t), zs, 1024)
    assert np.max(np.abs(vals - 1.0)) < 1e-12


def test_reproduces_harmonic_polynomials():
    # P[cos k t](r e^{i s}) = r^k cos k s: spectral accuracy of the trapezoid rule
    for k in (1, 3):
        def u(t, k=k):
            return np.cos(k * t)

        z = 0.5 * np.exp(0.7j)
        got = poisson_integral_slice(u, np.array([z]), 512)[0]
        want = 0.5 ** k * math.cos(0.7 * k)
        assert abs(got - want) < 1e-12


def test_mean_value_at_origin():
    f = SliceSeries([0.2 * E1, ONE, 0.3 * E2])
    u = modulus_boundary_function(f, UNIT_E1)
    got = poisson_integral(u, Quaternion(0.0), UNIT_E1, nodes=2048)
    ts = np.linspace(0.0, 2.0 * math.pi, 2048, endpoint=False)
    assert abs(got - float(np.mean(u(ts)))) < 1e-13


def test_even_data_is_conjugation_symmetric():
    # an intrinsic f has |f(e^{it})| even in t, so the integral is invariant
    # under q -> conjugate(q), on the slice and off it
    f = SliceSeries.from_real([0.1, 1.0, 0.0, 0.4])
    u = modulus_boundary_function(f, UNIT_E1)
    p = slice_point(UNIT_E1, 0.3 + 0.4j)
    assert abs(poisson_integral(u, p, UNIT_E1) - poisson_integral(u, p.conjugate(), UNIT_E1)) < 1e-12
    q = Quaternion(0.3) + 0.4 * ImaginaryUnit.from_vector(1.0, 2.0, 2.0).as_quaternion()
    assert abs(poisson_integral(u, q, UNIT_E1) - poisson_integral(u, q.conjugate(), UNIT_E1)) < 1e-12


def test_modes_cover_split_moduli():
    f = SliceSeries([0.2 * E1, ONE])
    assert set(MODES) == {"plus", "minus", "modulus", "modulus_squared_1", "modulus_squared_2"}
    for mode in MODES:
        d = harmonic_defect(f, slice_point(UNIT_E1, 0.25 + 0.1j), UNIT_E1, mode, nodes=1024)
        assert d >= -1e-8  # subharmonicity of component moduli


def test_harmonic_defect_zero_for_constant_modulus():
    # f = q has |f| = |q|: defect P[1](x) - |x| = 1 - |x| > 0
    f = SliceSeries([0.0, 1.0])
    x = slice_point(UNIT_E1, 0.3)
    d = harmonic_defect(f, x, UNIT_E1, "modulus", nodes=1024)
    assert abs(d - 0.7) < 1e-10


def test_rotation_equivariance():
    f = SliceSeries([0.1 * E2, ONE, 0.2 * E1])
    u = modulus_boundary_function(f, UNIT_E1)
    r = Quaternion(1.0, 1.0, 0.0, 0.0) * (1.0 / math.sqrt(2.0))
    q = slice_point(UNIT_E1, 0.4 + 0.2j)
    assert rotation_equivariance_residual(u, r, q, UNIT_E1, nodes=1024) < 1e-8
    with pytest.raises(ValueError):
        rotation_equivariance_residual(u, Quaternion(2.0), q, UNIT_E1)


def test_star_kernel_bound_orderings():
    f = SliceSeries([0.3 * E1, ONE, 0.2 * E2])
    x = slice_point(UNIT_E1, 0.35 + 0.2j)
    lhs, rhs = star_kernel_bound(f, x, UNIT_E1, UNIT_E2, nodes=1024)
    assert lhs <= rhs + 1e-8
    # j = i degenerates to twice the plain integral of the constant function
    c = SliceSeries([Quaternion(0.4, 0.1, 0.0, 0.2)])
    lhs_c, rhs_c = star_kernel_bound(c, x, UNIT_E1, UNIT_E1, nodes=1024)
    assert abs(rhs_c - 2.0 * lhs_c) < 1e-10


def test_boundary_too_close():
    one = BoundaryFunction.constant(1.0)
    with pytest.raises(BoundaryTooClose):
        poisson_integral(one, slice_point(UNIT_E1, 0.9999), UNIT_E1, nodes=64)
    with pytest.raises(BoundaryTooClose):
        poisson_integral_slice(lambda t: np.ones_like(t), np.array([0.999]), 64)
    # the same point is fine with enough nodes: trapezoid error ~ 2 r^n
    assert abs(poisson_integral(one, slice_point(UNIT_E1, 0.9999), UNIT_E1, nodes=2 ** 18) - 1.0) < 1e-8


def test_slice_batch_matches_scalar():
    f = SliceSeries([0.2 * E1, ONE, 0.3 * E2])
    u = modulus_boundary_function(f, UNIT_E1)
    zs = np.array([0.1, 0.2 + 0.3j, -0.5j, 0.7])
    batch = poisson_integral_slice(u, zs, 1024)
    for k, z in enumerate(zs):
        q = slice_point(UNIT_E1, complex(z))
        assert abs(batch[k] - poisson_integral(u, q, UNIT_E1, nodes=1024)) < 1e-12
