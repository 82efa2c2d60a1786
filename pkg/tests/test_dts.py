import math

import pytest

from zetageom import dts_eval, forward_diffs, invert, reduce_angle
from zetageom.dts import asymptotic_diffs
from zetageom.errors import DomainError

TWO_PI = 6.283185307179586


def test_table_first_difference_at_center():
    d = forward_diffs(1e9, 12615)
    assert d.d1_reduced == pytest.approx(-5.1851, abs=5e-4)
    assert d.d2_reduced == pytest.approx(TWO_PI - 0.0004, abs=5e-4)


def test_table_neighbour_first_differences():
    for n, want in [(12611, -5.1937), (12612, -5.1900), (12613, -5.1874),
                    (12614, -5.1857), (12616, -5.1854), (12617, -5.1867)]:
        assert forward_diffs(1e9, n).d1_reduced == pytest.approx(want, abs=5e-4)


def test_unreduced_cycle_structure_at_center():
    # d1(12615) spans n_p = 12615 full turns plus the reduced part
    d = forward_diffs(1e9, 12615)
    cycles = (d.d1_reduced - d.d1) / TWO_PI
    assert round(cycles) == 12615


def test_diff_of_16_near_full_turn():
    # at t = 100.586 the first difference passes 2pi near step 16
    d = forward_diffs(100.586, 16)
    assert min(abs(d.d1_reduced), TWO_PI - abs(d.d1_reduced)) < 0.2


def test_t_zero_gives_zeros():
    d = forward_diffs(0.0, 7)
    assert d.d1 == d.d2 == d.d3 == d.d4 == 0.0


def test_asymptotic_consistency():
    # |d2 - t/(n+1/2)^2| <= t/n^3 for n >= 10
    t = 1e5
    for n in (10, 50, 1000):
        d = forward_diffs(t, n)
        assert abs(d.d2 - t / (n + 0.5) ** 2) <= t / n**3
        assert asymptotic_diffs(t, n)[0] == pytest.approx(d.d1, rel=2e-2)


def test_advancement_identity():
    # d1(n+1) = d1(n) + d2(n) exactly in unreduced form (to float rounding)
    for t, n in [(1e9, 12615), (100.586, 9), (1e5, 333)]:
        a = forward_diffs(t, n)
        b = forward_diffs(t, n + 1)
        assert b.d1 == pytest.approx(a.d1 + a.d2, rel=1e-13, abs=1e-9)
        assert b.d2 == pytest.approx(a.d2 + a.d3, rel=1e-12, abs=1e-9)


def test_series_anchor():
    assert dts_eval(1e9, 12615, 0) == reduce_angle(1e9, 12615).theta


def test_series_table_column():
    assert dts_eval(1e9, 12615, 1, 4) == pytest.approx(-5.4148, abs=5e-4)
    assert dts_eval(1e9, 12615, -1, 4) == pytest.approx(-1.3272, abs=5e-4)
    assert dts_eval(1e9, 12615, 2, 4) == pytest.approx(-4.3170, abs=5e-4)
    assert dts_eval(1e9, 12615, -2, 4) == pytest.approx(-2.4230, abs=5e-4)


def test_series_accuracy_against_direct_reduction():
    # order-4 series vs direct reduction; the omitted term scales as
    # C(dn,5) * 24 t / n0^5, so the reachable |dn| grows with n0
    t = 1e5
    for n0, dn_max in [(130, 2), (400, 10), (900, 20)]:
        for dn in range(-dn_max, dn_max + 1, max(1, dn_max // 4)):
            want = reduce_angle(t, n0 + dn).theta
            got = dts_eval(t, n0, dn, 4)
            d = abs(got - want) % TWO_PI
            assert min(d, TWO_PI - d) <= 1e-3


def test_invert_theta_roundtrip():
    t = 100.586
    th = -t * math.log(5.0)
    assert invert(t, "theta", th) == pytest.approx(5.0, rel=1e-12)


def test_invert_d1_full_turn_is_step_16():
    n = invert(100.586, "d1", -TWO_PI)
    assert 15.0 <= n < 16.0
    assert math.ceil(n) == 16  # "about 16": first step with |d1| < 2pi


def test_invert_d1_exact_roundtrip():
    for n0 in (2, 10, 500, 10**6):
        d1 = forward_diffs(1e5, n0).d1
        n = invert(1e5, "d1", d1)
        assert n == pytest.approx(n0, rel=1e-9)
        assert n0 <= n + 1e-6 < n0 + 1


def test_invert_pendant_k():
    n = invert(1e9, "pendant_k", 1)
    assert n == pytest.approx(12615.66, abs=0.01)
    assert int(n) == 12615
    n = invert(7007.18902, "pendant_k", 1)
    assert n == pytest.approx(33.395, abs=1e-3)
    assert int(n) == 33
    assert n - int(n) == pytest.approx(0.3950, abs=5e-4)


def test_invert_d2_positive_root():
    # d2(n) unreduced is positive; inversion recovers n
    t = 1e5
    for n0 in (200, 1000):
        d2 = forward_diffs(t, n0).d2
        n = invert(t, "d2", d2)
        assert n == pytest.approx(n0, abs=0.51)


def test_invert_domain_errors():
    with pytest.raises(DomainError):
        invert(100.0, "d1", 1.0)
    with pytest.raises(DomainError):
        invert(100.0, "nope", 1.0)


def test_dts_requires_small_offset():
    with pytest.raises(DomainError):
        dts_eval(1e5, 100, 51)
