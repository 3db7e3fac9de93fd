import math

import numpy as np
import pytest

from slicereg.majorant import (
    DomainError,
    PowerMajorant,
    ScaledMajorant,
    SumMajorant,
    TabulatedMajorant,
    check_regular,
    combine,
    evaluate_majorant,
    power_regularity_constant,
    squared,
)


def test_power_majorant_basics():
    w = PowerMajorant(0.5)
    assert w(0.0) == 0.0
    assert w(0.25) == 0.5
    assert abs(w(2.0) - math.sqrt(2.0)) < 1e-15
    xs = np.array([0.01, 0.04, 1.0])
    assert np.allclose(w(xs), np.sqrt(xs))
    with pytest.raises(DomainError):
        w(-0.1)
    with pytest.raises(DomainError):
        w(2.5)
    with pytest.raises(ValueError):
        PowerMajorant(0.0)
    with pytest.raises(ValueError):
        PowerMajorant(1.5)  # omega(t)/t would increase


def test_closed_form_regularity_constant():
    # integral constant for t^alpha: 1/alpha + 1/(1-alpha)
    assert abs(power_regularity_constant(0.5) - 4.0) < 1e-12
    assert abs(power_regularity_constant(0.25) - (4.0 + 4.0 / 3.0)) < 1e-12


@pytest.fixture(scope="module")
def cert_half():
    return check_regular(PowerMajorant(0.5))


def test_power_half_certified_regular(cert_half):
    assert cert_half.is_regular
    assert cert_half.monotone and cert_half.ratio_monotone
    # empirical constant approaches the closed form 4 from below
    assert 3.9 < cert_half.empirical_C <= 4.0 + 1e-6
    assert cert_half.empirical_C == pytest.approx(3.9998585786159864, rel=1e-9)
    # refinement history is increasing toward the sup
    assert cert_half.history[0] < cert_half.history[-1] <= cert_half.empirical_C + 1e-12


def test_power_quarter_and_three_quarters():
    c25 = check_regular(PowerMajorant(0.25))
    assert c25.is_regular
    assert c25.empirical_C <= power_regularity_constant(0.25) + 1e-6
    c75 = check_regular(PowerMajorant(0.75))
    assert c75.is_regular
    # the grid minimum of the regularity quotient sits below the closed form
    assert c75.empirical_C <= power_regularity_constant(0.75) + 1e-6


def test_identity_majorant_rejected_with_log_divergence():
    cert = check_regular(PowerMajorant(1.0))
    assert not cert.is_regular
    # the quotient at the worst grid point grows like 1 + ln(2/x)
    floor = 0.9 * math.log(2.0 / cert.worst_x)
    assert cert.empirical_C >= floor
    # and the refinement history keeps climbing
    assert cert.history[0] < cert.history[1] < cert.history[2]


def test_quadratic_tabulated_rejected_by_ratio_monotonicity():
    t = np.linspace(0.0, 2.0, 4097)
    quad = TabulatedMajorant(t, t ** 2)
    cert = check_regular(quad)
    assert not cert.is_regular
    assert not cert.ratio_monotone  # omega(t)/t increases


def test_tabulated_matches_power_on_grid():
    t = np.linspace(0.0, 2.0, 2049)
    tab = TabulatedMajorant(t, np.sqrt(t))
    w = PowerMajorant(0.5)
    xs = np.linspace(0.001, 1.999, 57)
    assert np.max(np.abs(tab(xs) - w(xs))) < 1e-3  # linear interpolation error
    with pytest.raises(ValueError):
        TabulatedMajorant(t[1:], np.sqrt(t[1:]))  # must start at the origin
    with pytest.raises(ValueError):
        TabulatedMajorant(t, -np.sqrt(t))


def test_scaled_and_sum_combinators(cert_half):
    w = PowerMajorant(0.5)
    s = ScaledMajorant(2.0, w)
    assert abs(s(0.25) - 1.0) < 1e-15
    scert = check_regular(s)
    assert scert.is_regular
    # the regularity quotient is scale-invariant
    assert abs(scert.empirical_C - cert_half.empirical_C) < 1e-9
    both = SumMajorant(PowerMajorant(0.5), PowerMajorant(0.25))
    cert = check_regular(both)
    assert cert.is_regular
    # the slower-vanishing quarter-power tail dominates the quotient
    assert cert.empirical_C <= power_regularity_constant(0.25) + 1e-6
    assert ScaledMajorant(0.0, w)(1.0) == 0.0  # degenerate zero scale is allowed
    with pytest.raises(ValueError):
        ScaledMajorant(-1.0, w)


def test_squared_majorant():
    w = PowerMajorant(0.5)
    w2 = squared(w)
    xs = np.linspace(0.0, 2.0, 101)
    assert np.max(np.abs(w2(xs) - xs)) < 1e-9
    # omega regular with omega^2 regular as well (alpha = 1/4 case)
    assert check_regular(squared(PowerMajorant(0.25))).is_regular


def test_combine_scales_componentwise():
    w1, w2 = PowerMajorant(0.5), PowerMajorant(0.25)
    m1, m2 = combine(2.0, 0.5, w1, w2)
    # at t=1 both inputs evaluate to 1: the combined bounds are
    # |a1| w1 + |a2| w2 in each component
    assert abs(m1(1.0) - 2.5) < 1e-12
    assert abs(m2(1.0) - 2.5) < 1e-12
    assert m1(0.0) == 0.0


def test_evaluate_majorant_helper():
    w = PowerMajorant(0.5)
    assert evaluate_majorant(w, 0.25) == w(0.25)
    assert np.allclose(evaluate_majorant(w, [0.25, 1.0]), [0.5, 1.0])
