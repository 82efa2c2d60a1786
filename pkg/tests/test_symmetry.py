import cmath
import math

import numpy as np
import pytest

from zetageom import (
    conjugate_range,
    conjugate_ratio_experiment,
    frame,
    gaussian_scroll,
    pendant_center,
    pendant_radius_cap,
    q_exact,
    spiral_center,
    theta_rs,
    theta_sym,
)
from zetageom.dw import SParam
from zetageom.errors import DomainError
from zetageom.symmetry import multiplicity, series_end, two_theta_reduced
from zetageom.zeros import gram_point

TWO_PI = 2.0 * math.pi


def _angdist(a, b):
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def test_frame_t1e9():
    fr = frame(SParam(0.5, 1e9))
    assert fr.n_p == 12615
    assert fr.theta_sym % math.pi == pytest.approx(2.116654, abs=2e-4)
    assert abs(fr.Q_asym) == pytest.approx(1.0, rel=1e-12)


def test_frame_gram_6710():
    t = gram_point(6710).t
    fr = frame(SParam(0.5, t))
    assert fr.n_p == 33
    assert fr.p == pytest.approx(0.3950, abs=5e-4)


def test_frame_below_2pi_rejected():
    with pytest.raises(DomainError):
        frame(SParam(0.5, 6.0))


def test_theta_axis_relation():
    for t in (100.586, 7007.18902, 1e9):
        assert _angdist(theta_rs(t) - theta_sym(t), math.pi / 2.0) <= 1e-9


def test_conjugate_range_fixed_point():
    fr = frame(SParam(0.5, 1e5))
    lo, hi = conjugate_range(fr.n_p, fr)
    assert lo < fr.n_p < hi


def test_conjugate_range_first_step():
    fr = frame(SParam(0.5, 1e5))
    lo, hi = conjugate_range(1, fr)
    assert lo == pytest.approx(2.0 * fr.n_p**2 / 3.0)
    assert hi == pytest.approx(2.0 * fr.n_p**2)
    assert multiplicity(1, fr) == fr.n_p**2


def test_origin_conjugate_is_series_end():
    t = 1e5
    assert series_end(t) == pytest.approx(t / math.pi - 0.5)


def test_reciprocity_point_inside_range():
    # the exact reciprocal partner (n+1/2)(~n+1/2) = t/2pi lies inside the
    # conjugate region for every n
    t = 1e5
    fr = frame(SParam(0.5, t))
    for n in range(1, fr.n_p + 1):
        lo, hi = conjugate_range(n, fr)
        recip = t / (TWO_PI * (n + 0.5)) - 0.5
        assert lo * (1 - 2e-2) <= recip <= hi * (1 + 2e-2)


def test_reciprocity_midpoint_near_center():
    # where the region is narrow (n close to n_p) the arithmetic midpoint
    # satisfies the reciprocity identity to a few parts in n_p
    t = 1e5
    fr = frame(SParam(0.5, t))
    for n in range(fr.n_p // 2, fr.n_p + 1, 9):
        lo, hi = conjugate_range(n, fr)
        mid = 0.5 * (lo + hi)
        assert (n + 0.5) * (mid + 0.5) == pytest.approx(
            t / TWO_PI, rel=4.0 / fr.n_p)


def test_conjugate_range_rejects_beyond_center():
    fr = frame(SParam(0.5, 1e5))
    with pytest.raises(DomainError):
        conjugate_range(fr.n_p + 1, fr)


def test_spiral_center_transverse_vanishes_at_zero_offset():
    # t one ulp above 1000 pi: delta_t ~ 1e-13, so the correction is purely
    # longitudinal in the frame of step N
    N = 1000
    t = math.nextafter(math.pi * N, math.inf)
    c0 = spiral_center(SParam(0.5, t), 1, order=0)
    c1 = spiral_center(SParam(0.5, t), 1, order=1)
    assert c0.N_k == N
    assert 0.0 <= c0.delta_t < 1e-9
    corr = c1.center - c0.center
    from zetageom.dw import reduce_angle

    unit = cmath.exp(1j * reduce_angle(t, N).theta)
    local = corr / unit
    assert abs(local.imag) <= 1e-12  # tau = delta_t/(4 N^{1+sigma}) ~ 0
    assert local.real == pytest.approx(0.5 / (4.0 * N**1.5), rel=1e-6)


def test_spiral_center_error_orders_at_refined_zero(zeros_1100_1200):
    # at zeros the center magnitude is the evaluation error
    alpha = zeros_1100_1200[0].alpha
    s = SParam(0.5, alpha)
    e0 = abs(spiral_center(s, 1, order=0).center)
    e1 = abs(spiral_center(s, 1, order=1).center)
    N = spiral_center(s, 1, order=0).N_k
    assert e1 < e0
    assert e0 <= 2.0 * N**-1.5  # |sigma/4 + i dt/4| <= ~0.8
    assert e1 <= 10.0 * N**-2.5


def test_pendant_integer_xp_phase():
    # t = 2 pi m^2 gives p = 0: correction is -e^{-i t ln n_p}/(2 n_p^sigma)
    m = 100
    t = TWO_PI * m * m
    s = SParam(0.5, t)
    pc = pendant_center(s)
    from zetageom import partial_sum
    from zetageom.dw import reduce_angle

    base = partial_sum(s, m)
    want = -cmath.exp(1j * reduce_angle(t, m).theta) / (2.0 * math.sqrt(m))
    assert pc.value - base == pytest.approx(want, abs=1e-9)
    assert not pc.capped


def test_pendant_cap_engages_near_quarter():
    m = 100
    t = TWO_PI * (m + 0.25) ** 2
    pc = pendant_center(SParam(0.5, t))
    cap = 6.0 ** (1.0 / 3.0) * m ** (1.0 / 6.0) / TWO_PI
    assert pc.capped
    assert pc.L <= cap * 2.0


def test_pendant_sine_law_moderate_p():
    t = gram_point(6710).t  # p = 0.395, away from the degenerate points
    a = pendant_center(SParam(0.5, t), method="first_order")
    b = pendant_center(SParam(0.5, t), method="sine_law")
    assert b.method == "sine_law"
    assert abs(a.value - b.value) <= 0.2 * abs(a.value)


def test_pendant_sine_law_degenerate_falls_back():
    m = 100
    t = TWO_PI * (m + 0.25) ** 2
    with pytest.warns(UserWarning):
        pc = pendant_center(SParam(0.5, t), method="sine_law")
    assert pc.method == "first_order"
    assert pc.capped


def test_radius_cap_cubic():
    # p=0 root is exactly 1; p=1/4 root tends to (6 n_p)^(1/3); the exact
    # value comes from an independent polynomial solve
    assert pendant_radius_cap(100, 0.0) == pytest.approx(1.0, rel=1e-12)
    for n_p, p in [(100, 0.25), (108, 0.25), (5000, 0.25), (300, 0.4)]:
        got = pendant_radius_cap(n_p, p)
        b = 2.0 + 6.0 * n_p * (1.0 - 4.0 * p)
        roots = np.roots([1.0, -3.0, b, -6.0 * n_p])
        real_pos = [r.real for r in roots if abs(r.imag) < 1e-7 and r.real > 0]
        assert got == pytest.approx(min(real_pos), rel=1e-8)
    # the asymptotic cube-root form: relative gap shrinks with n_p
    assert pendant_radius_cap(5000, 0.25) == pytest.approx(
        (6.0 * 5000) ** (1.0 / 3.0), rel=0.04)
    assert pendant_radius_cap(108, 0.25) == pytest.approx(
        (6.0 * 108) ** (1.0 / 3.0), rel=0.15)


def test_q_exact_unit_modulus_on_critical_line():
    for t in (100.586, 7007.189):
        assert abs(q_exact(SParam(0.5, t))) == pytest.approx(1.0, abs=1e-8)


def test_q_exact_involution():
    from zetageom.symmetry import _q_exact_signed

    for sigma, t in [(0.5, 30.0), (0.3, 100.586), (0.7, 549.4975)]:
        prod = _q_exact_signed(sigma, t) * _q_exact_signed(1.0 - sigma, -t)
        assert abs(prod - 1.0) <= math.exp(-math.pi * t) + 1e-8


def test_q_exact_phase_approaches_asymptotic():
    t = 1e4
    s = SParam(0.5, t)
    ph = _angdist(cmath.phase(q_exact(s)), two_theta_reduced(t))
    assert ph <= 1e-2


def test_conjugate_ratios_amplitude_critical_line():
    s = SParam(0.5, 1e5)
    for qk in conjugate_ratio_experiment(s, 10):
        assert abs(qk) == pytest.approx(1.0, abs=1e-3)


def test_conjugate_ratios_amplitude_off_line():
    s = SParam(0.45, 1e5)
    xp = math.sqrt(1e5 / TWO_PI)
    for qk in conjugate_ratio_experiment(s, 10):
        assert abs(qk) == pytest.approx(xp**0.1, rel=1e-3)


def test_conjugate_ratios_phase_sum():
    s = SParam(0.5, 1e5)
    tgt = two_theta_reduced(1e5)
    for qk in conjugate_ratio_experiment(s, 10):
        assert _angdist(cmath.phase(qk), tgt) <= 1e-3


def test_conjugate_ratio_kmax_guard():
    with pytest.raises(DomainError):
        conjugate_ratio_experiment(SParam(0.5, 1e5), 60)


def test_gaussian_scroll_trivials():
    s = SParam(0.5, 1e5)
    assert abs(gaussian_scroll(s, 1)) == pytest.approx(1.0, rel=1e-12)
    fr = frame(s)
    with pytest.warns(UserWarning):
        v = gaussian_scroll(s, fr.n_p)  # tilt term vanishes at k = n_p
    assert cmath.phase(v) == pytest.approx(
        cmath.phase(cmath.exp(1j * (two_theta_reduced(1e5) - math.pi / 4.0))),
        abs=1e-9)


def test_gaussian_scroll_matches_experiment():
    s = SParam(0.5, 1e5)
    q1 = conjugate_ratio_experiment(s, 1)[0]
    g1 = gaussian_scroll(s, 1)
    assert abs(g1 - q1) <= 1e-3 * abs(q1)


def test_inflection_angle_identity():
    # angle from the scroll-(k+1) inflection step to the scroll-k inflection
    # step equals the first angle difference of original step k, within 1e-3
    t = 1e5
    from zetageom.dw import reduce_angle

    # conjugate regions run mirrored, so step directions agree as lines:
    # the identity holds mod pi (the continuous form is exactly pi off)
    for k in (1, 2, 3, 4, 5):
        nk = 1.0 / (math.exp(TWO_PI * k / t) - 1.0)
        nk1 = 1.0 / (math.exp(TWO_PI * (k + 1) / t) - 1.0)
        lhs = t * math.log(nk1 / nk)  # theta(n_k) - theta(n_k+1), unreduced
        rhs = -t * math.log(1.0 + 1.0 / k)
        d = abs(lhs - rhs) % math.pi
        assert min(d, math.pi - d) <= 5e-3
        lhs_int = (reduce_angle(t, int(nk)).theta
                   - reduce_angle(t, int(nk1)).theta)
        d = abs(lhs_int - rhs) % math.pi
        assert min(d, math.pi - d) <= 5e-3


def test_pendant_lies_on_symmetry_axis_at_zero(zeros_1100_1200):
    # zeta = P + Q conj(P) = 0 forces arg(P) = Theta + pi/2 (mod pi): the
    # pendant center, the origin and the symmetry axis line up at a zero.
    # The angular tolerance is the first-order P error over |P|.
    checked = 0
    for rec in zeros_1100_1200:
        pc = pendant_center(SParam(0.5, rec.alpha))
        if abs(pc.value) < 0.5 or pc.capped:
            continue
        d = abs(cmath.phase(pc.value) - theta_sym(rec.alpha)) % math.pi
        n_p = frame(SParam(0.5, rec.alpha)).n_p
        tol = 0.015 + 1.5 * n_p**-1.5 / abs(pc.value)
        assert min(d, math.pi - d) <= tol
        checked += 1
    assert checked >= 20
