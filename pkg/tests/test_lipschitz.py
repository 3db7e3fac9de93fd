import math

import numpy as np
import pytest

from slicereg.lipschitz import (
    DERIVATIVE_MODES,
    DegeneratePlan,
    GrowthCheck,
    NormEstimate,
    SamplePlan,
    SingularPoint,
    _displaced_point,
    ball_pair_coords,
    boundary_norm,
    bounded_growth_check,
    circle_pair_angles,
    component_estimates,
    component_norm,
    derivative_ratio,
    disc_pair_coords,
    disc_points,
    global_norm,
    schwarz_pick_criterion,
    seminorms_N,
    slice_norm,
    slice_pair_coords,
)
from slicereg.majorant import PowerMajorant
from slicereg.quaternion import (
    E1,
    E2,
    ONE,
    UNIT_E1,
    Quaternion,
    norm_array,
    slice_point,
    slice_points_array,
)
from slicereg.series import SliceSeries, eval_complex, evaluate, evaluate_batch, split

I = UNIT_E1
W_HALF = PowerMajorant(0.5)
W_LIN = PowerMajorant(1.0)
IDENT = SliceSeries([0.0, 1.0])
SQUARE = SliceSeries([0.0, 0.0, 1.0])
PLAN = SamplePlan()


# --- plan construction and sampling streams -----------------------------------

def test_plan_validation():
    with pytest.raises(DegeneratePlan):
        SamplePlan(n_pairs=2)
    with pytest.raises(DegeneratePlan):
        SamplePlan(max_radius=1.0)
    with pytest.raises(DegeneratePlan):
        SamplePlan(min_separation=0.0)
    with pytest.raises(DegeneratePlan):
        SamplePlan(min_separation=2.0)  # >= 2 * max_radius


def test_child_rng_deterministic():
    a = PLAN.child_rng(5).normal(size=4)
    b = SamplePlan().child_rng(5).normal(size=4)
    assert np.array_equal(a, b)
    c = SamplePlan(seed=999).child_rng(5).normal(size=4)
    assert not np.array_equal(a, c)


def _pair_set(coords, digits=12):
    z1, z2 = coords
    if z1.ndim == 1:
        return set(zip(np.round(z1, digits), np.round(z2, digits)))
    return {tuple(np.round(np.concatenate(p), digits)) for p in zip(z1, z2)}


@pytest.mark.parametrize("stream", [slice_pair_coords, ball_pair_coords, circle_pair_angles])
def test_pair_streams_are_prefix_stable(stream):
    small = _pair_set(stream(SamplePlan(n_pairs=1024)))
    large = _pair_set(stream(SamplePlan(n_pairs=4096)))
    assert small <= large
    assert len(large) > len(small)


def test_pair_streams_respect_plan_bounds():
    z1, z2 = slice_pair_coords(PLAN)
    assert np.max(np.abs(z1)) <= PLAN.max_radius + 1e-12
    assert np.min(np.abs(z1 - z2)) >= PLAN.min_separation - 1e-12
    q1, q2 = ball_pair_coords(PLAN)
    assert np.max(np.linalg.norm(q1, axis=1)) <= PLAN.max_radius + 1e-12
    assert np.min(np.linalg.norm(q1 - q2, axis=1)) >= PLAN.min_separation - 1e-12


def test_disc_points_cover_origin_and_cap():
    xs = disc_points(PLAN)
    assert np.any(xs == 0.0)
    assert abs(np.max(np.abs(xs)) - PLAN.max_radius) < 1e-12
    capped = disc_points(PLAN, cap=0.5)
    assert np.max(np.abs(capped)) <= 0.5 + 1e-12


# --- norm estimators against closed forms --------------------------------------

def test_slice_norm_oracles():
    est = slice_norm(IDENT, W_HALF, I, PLAN)
    assert isinstance(est, NormEstimate)
    # sup |x-y|^(1/2) over the disc, attained at a diameter: sqrt(2)
    assert est.value == pytest.approx(math.sqrt(2.0), rel=0.02)
    assert est.samples_used > 1000
    a, b = est.argmax_pair
    assert norm_array(np.array([np.array(a.components()) - np.array(b.components())]))[0] > 1.9
    # f = q^2 with omega = t: sup |x + y| = 2
    assert slice_norm(SQUARE, W_LIN, I, PLAN).value == pytest.approx(2.0, rel=0.02)
    # constants have zero norm
    assert slice_norm(SliceSeries([Quaternion(2, 1, 0, 3)]), W_HALF, I, PLAN).value == 0.0


def test_global_norm_oracle():
    assert global_norm(IDENT, W_HALF, PLAN).value == pytest.approx(math.sqrt(2.0), rel=0.02)
    assert global_norm(SQUARE, W_LIN, PLAN).value == pytest.approx(2.0, rel=0.02)


def test_component_norm_matches_slice_for_single_component():
    # f = q has F(z) = z, G = 0: the joint norm reduces to the slice norm
    joint = component_norm(IDENT, W_HALF, W_HALF, I, PLAN)
    plain = slice_norm(IDENT, W_HALF, I, PLAN)
    assert joint.value == pytest.approx(plain.value, rel=1e-12)


def test_component_sandwich_per_pair():
    # max(r1, r2) <= r_full <= r1 + r2 at every sampled pair, as evaluated
    f = SliceSeries([0.2 * E1, ONE, 0.4 * E2])
    z1, z2 = slice_pair_coords(PLAN)
    F, G, _ = split(f, I)
    d = W_HALF(np.abs(z1 - z2))
    r1 = np.abs(eval_complex(F, z1) - eval_complex(F, z2)) / d
    r2 = np.abs(eval_complex(G, z1) - eval_complex(G, z2)) / d
    r_full = np.hypot(r1, r2)
    assert np.all(np.maximum(r1, r2) <= r_full + 1e-15)
    assert np.all(r_full <= r1 + r2 + 1e-15)
    c1, c2, joint = component_estimates(f, W_HALF, W_HALF, I, PLAN)
    assert max(c1.value, c2.value) <= joint.value + 1e-12
    assert joint.value <= c1.value + c2.value + 1e-12


def test_pythagoras_on_components():
    # identity between the quaternionic and split evaluations, relative to
    # the function scale (the pair difference itself cancels catastrophically
    # at near-diagonal separations)
    f = SliceSeries([0.2 * E1, ONE, 0.4 * E2])
    z1, z2 = slice_pair_coords(PLAN)
    F, G, _ = split(f, I)
    dF = np.abs(eval_complex(F, z1) - eval_complex(F, z2))
    dG = np.abs(eval_complex(G, z1) - eval_complex(G, z2))
    full = norm_array(
        evaluate_batch(f, slice_points_array(I, z1))
        - evaluate_batch(f, slice_points_array(I, z2))
    )
    scale = max(1.0, float(np.max(norm_array(evaluate_batch(f, slice_points_array(I, z1))))))
    assert np.max(np.abs(full ** 2 - (dF ** 2 + dG ** 2))) <= 1e-12 * scale ** 2


def test_estimates_monotone_in_pairs():
    values = [
        slice_norm(SQUARE, W_LIN, I, SamplePlan(n_pairs=n)).value
        for n in (512, 2048, 8192)
    ]
    assert values[0] <= values[1] + 1e-15
    assert values[1] <= values[2] + 1e-15
    g = [global_norm(SQUARE, W_LIN, SamplePlan(n_pairs=n)).value for n in (1024, 4096)]
    assert g[0] <= g[1] + 1e-15


def test_boundary_norm_oracles():
    est = boundary_norm(IDENT, W_LIN, I, PLAN)
    assert abs(est.value - 1.0) < 1e-12  # isometry on the circle
    mod = boundary_norm(IDENT, W_LIN, I, PLAN, values="modulus")
    assert mod.value < 1e-10  # |f| is constant on the circle
    with pytest.raises(ValueError):
        boundary_norm(IDENT, W_LIN, I, PLAN, values="nope")


def test_seminorms_oracles():
    n1, n2, n3 = seminorms_N(np.array([0.0, 1.0]), W_HALF, I, PLAN, nodes=2048)
    # radial difference sup (1-r)^(1/2) -> 1 and the defect sup matches
    assert n1 == pytest.approx(1.0, abs=1e-6)
    assert n2 == pytest.approx(1.0, abs=1e-6)
    # same-ray pairs extremize the quotient of the modulus: sqrt(d) <= 1
    assert n3 == pytest.approx(1.0, abs=1e-12)
    c1, c2, c3 = seminorms_N(np.array([0.3 + 0.0j]), W_HALF, I, PLAN, nodes=2048)
    assert c1 < 1e-3 and c2 == 0.0 and c3 == 0.0  # c1 carries quadrature noise


# --- derivative functionals -----------------------------------------------------

def test_derivative_ratio_oracles():
    assert set(DERIVATIVE_MODES) == {"full", "plus", "minus"}
    est = derivative_ratio(IDENT, W_LIN, I, "full", PLAN)
    assert abs(est.value - 1.0) < 1e-12  # (1-|x|)/(1-|x|) at every sample
    # f' = 1 is a slice-plane value: the minus sandwich doubles it, plus kills it
    assert derivative_ratio(IDENT, W_LIN, I, "plus", PLAN).value < 1e-12
    assert abs(derivative_ratio(IDENT, W_LIN, I, "minus", PLAN).value - 2.0) < 1e-12
    # f = q^2: sup 2|x| = 2 rho
    est2 = derivative_ratio(SQUARE, W_LIN, I, "full", PLAN)
    assert est2.value == pytest.approx(2.0 * PLAN.max_radius, rel=1e-6)
    capped = derivative_ratio(SQUARE, W_LIN, I, "full", PLAN, cap=0.5)
    assert capped.value == pytest.approx(1.0, rel=1e-6)
    with pytest.raises(ValueError):
        derivative_ratio(IDENT, W_LIN, I, "sideways", PLAN)


def test_parallelogram_identity_at_samples():
    f = SliceSeries([0.2 * E1, ONE, 0.4 * E2, 0.1 * Quaternion(1, 1, 1, 1)])
    from slicereg.series import cullen_derivative

    Fp, Gp, _ = split(cullen_derivative(f), I)
    xs = disc_points(PLAN)
    a, b = np.abs(eval_complex(Fp, xs)), np.abs(eval_complex(Gp, xs))
    full_sq = 4.0 * (a ** 2 + b ** 2)
    plus, minus = 2.0 * b, 2.0 * a
    assert np.max(np.abs(full_sq - (plus ** 2 + minus ** 2))) <= 1e-12 * max(1.0, full_sq.max())


def test_bounded_growth_oracles():
    chk = bounded_growth_check(IDENT, Quaternion(0.0), I, PLAN)
    assert isinstance(chk, GrowthCheck)
    assert chk.lhs_quadratic == pytest.approx(0.25, abs=1e-12)
    assert chk.rhs_quadratic == pytest.approx(1.0, rel=1e-6)
    assert chk.sandwich_slack >= -1e-12 and chk.quadratic_slack >= -1e-12
    # constant: lhs_plus = |c + ici|, lhs_minus = |c - ici|, rhs = |c|
    c = Quaternion(0.3, 0.4, 0.1, 0.0)
    chc = bounded_growth_check(SliceSeries([c]), Quaternion(0.0), I, PLAN)
    assert chc.lhs_plus == pytest.approx(0.2, abs=1e-12)
    assert chc.lhs_minus == pytest.approx(1.0, abs=1e-12)
    assert chc.local_sup == pytest.approx(0.5099019513592785, rel=1e-12)
    assert chc.sandwich_slack >= 0.0
    with pytest.raises(ValueError):
        bounded_growth_check(IDENT, Quaternion(1.5), I, PLAN)


def test_bounded_growth_random_points():
    rng = np.random.default_rng(3)
    f = SliceSeries([Quaternion(*r) for r in rng.normal(size=(4, 4)) * 0.4])
    for _ in range(20):
        z = rng.uniform(-0.6, 0.6) + 1j * rng.uniform(-0.6, 0.6)
        chk = bounded_growth_check(f, slice_point(I, complex(z)), I, PLAN)
        assert chk.sandwich_slack >= -1e-8
        assert chk.quadratic_slack >= -1e-8


# --- Schwarz-Pick functional ------------------------------------------------------

def test_schwarz_pick_identity_function():
    rep = schwarz_pick_criterion(IDENT, W_HALF, I, PLAN)
    assert rep.interpretation == "series"
    assert rep.contract_ok
    assert rep.n_used > 400
    assert rep.derivative_constant <= rep.hypothesis_constant * 1.25 + 1e-12
    rep2 = schwarz_pick_criterion(IDENT, W_HALF, I, PLAN, interpretation="pointwise")
    assert rep2.contract_ok
    with pytest.raises(ValueError):
        schwarz_pick_criterion(IDENT, W_HALF, I, PLAN, interpretation="other")


def test_schwarz_pick_constant_reports_empty():
    rep = schwarz_pick_criterion(SliceSeries([0.4]), W_HALF, I, PLAN)
    assert rep.n_used == 0
    assert rep.n_skipped > 0
    assert rep.hypothesis_constant == 0.0


def test_displaced_point_interpretations_agree_at_real_x():
    # real coefficients + real x keep every factor in R, where the two
    # readings of conjugate(f(x)) * f(x) coincide
    from slicereg.series import cullen_derivative, symmetrization

    f = SliceSeries.from_real([0.1, 0.5, 0.0, 0.2])
    fp = cullen_derivative(f)
    s = symmetrization(f)
    coeffs = [-c.x0 for c in s.coefficients]
    coeffs[0] = 1.0 + coeffs[0]
    aux = SliceSeries.from_real(coeffs)
    for x in (0.3, -0.45, 0.6):
        x_q = Quaternion(x)
        fx, fpx = evaluate(f, x_q), evaluate(fp, x_q)
        a = _displaced_point(f, aux, x_q, fx, fpx, "series")
        b = _displaced_point(f, None, x_q, fx, fpx, "pointwise")
        assert norm_array(np.array([np.array(a.components()) - np.array(b.components())]))[0] < 1e-12


def test_singular_point_raised_at_critical_point():
    # f = q^2 has f'(0) = 0: the displaced point is undefined there
    zero = Quaternion(0.0)
    with pytest.raises(SingularPoint):
        _displaced_point(SQUARE, None, zero, zero, zero, "pointwise")
