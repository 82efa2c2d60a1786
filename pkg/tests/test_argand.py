import math

import numpy as np
import pytest

from zetageom import dump_steps, partial_sum, step, zeta_geometric
from zetageom.dw import SParam
from zetageom.errors import DomainError


def test_first_step_is_unity():
    for s in (SParam(0.5, 100.586), SParam(0.3, 1e9), SParam(2.0, 0.0)):
        assert step(s, 1) == 1.0 + 0.0j


def test_step_polar_form_at_t1e9():
    v = step(SParam(0.5, 1e9), 12615)
    assert abs(v) == pytest.approx(12615**-0.5, rel=1e-12)
    assert math.atan2(v.imag, v.real) == pytest.approx(-0.2297, abs=5e-4)


def test_step_real_axis():
    assert step(SParam(2.0, 0.0), 3) == pytest.approx(1.0 / 9.0)


def test_partial_sum_single_term():
    assert partial_sum(SParam(0.7, 44.4), 1) == 1.0 + 0.0j


def test_partial_sum_basel_with_tail_bound():
    # independent oracle: |sum_{n<=N} n^-2 - pi^2/6| <= 1/N
    N = 10**6
    v = partial_sum(SParam(2.0, 0.0), N)
    assert abs(v.imag) == 0.0
    assert abs(v.real - math.pi**2 / 6.0) <= 1.0 / N
    assert v.real == pytest.approx(math.pi**2 / 6.0, abs=1e-6)


def test_partial_sum_pendant_modulus_gram_6710():
    # frozen from a 50-digit reference computation of |sum_{n<=33} n^-s|;
    # the figure-derived "about 3.5" eyeball underestimates it
    v = partial_sum(SParam(0.5, 7007.18902), 33)
    assert abs(v) == pytest.approx(4.15563, abs=1e-3)


def test_dump_matches_partial_sum():
    s = SParam(0.5, 100.586)
    st = dump_steps(s, 1, 64, 1)
    assert len(st.records) == 64
    assert st.records[0].step == 1.0 + 0.0j
    tail = st.records[-1].cumulative
    ref = partial_sum(s, 64)
    assert abs(tail - ref) <= 1e-12 * abs(ref)
    # per-record chaining
    for a, b in zip(st.records, st.records[1:]):
        assert b.cumulative == pytest.approx(a.cumulative + b.step, abs=1e-12)


def test_dump_strided_record_count():
    st = dump_steps(SParam(0.5, 1e9), 1, 10**4, 100)
    assert len(st.records) == 101
    assert [r.n for r in st.records[:3]] == [1, 101, 201]
    # strided cumulative still matches the dense sum
    ref = partial_sum(SParam(0.5, 1e9), 201)
    assert abs(st.records[2].cumulative - ref) <= 1e-12 * max(1.0, abs(ref))


def test_final_spiral_grows_for_sigma_below_one():
    s = SParam(0.5, 549.4975)
    st = dump_steps(s, 1, 549, 1)
    center = zeta_geometric(s).value
    radii = [abs(r.cumulative - center) for r in st.records if r.n > 549.4975 / math.pi]
    first = np.mean(radii[:30])
    last = np.mean(radii[-30:])
    assert last > first  # radius of the final spiral increases


def test_empty_range_rejected():
    with pytest.raises(DomainError):
        dump_steps(SParam(0.5, 10.0), 5, 4, 1)


def test_triangle_inequality():
    s = SParam(0.5, 1234.5)
    v = partial_sum(s, 500)
    bound = float(np.sum(np.arange(1, 501) ** -0.5))
    assert abs(v) <= bound


def test_tail_bound_sigma_above_one():
    # |S(N) - S(2N)| <= N^{1-sigma}/(sigma-1)
    for sigma in (1.5, 2.0):
        s = SParam(sigma, 3.3)
        N = 2000
        d = abs(partial_sum(s, N) - partial_sum(s, 2 * N))
        assert d <= N ** (1.0 - sigma) / (sigma - 1.0)


def test_chunking_independence():
    # driving the engine through different chunk paths agrees to 1e-12
    from zetageom import argand

    s = SParam(0.5, 98765.4)
    ref = partial_sum(s, 3 * 4096 + 123)
    old = argand._CHUNK
    try:
        argand._CHUNK = 4096
        alt = partial_sum(s, 3 * 4096 + 123)
    finally:
        argand._CHUNK = old
    assert abs(ref - alt) <= 1e-12 * max(1.0, abs(ref))
