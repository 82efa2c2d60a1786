"""Step streams n^-s and compensated partial sums.

partial_sum is the workhorse behind every evaluator: terms are generated in
fixed 4096-wide blocks aligned to absolute n, each block summed by the
selected kernel backend and the block totals combined with Neumaier
compensation, so results are deterministic and independent of chunking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .dw import ReducedAngle, SParam
from .errors import DomainError

_CHUNK = 1 << 19  # terms per kernel call; multiple of the 4096 block


@dataclass(frozen=True)
class StepRecord:
    n: int
    length: float
    theta: ReducedAngle
    step: complex
    cumulative: complex


@dataclass
class ArgandStream:
    s: SParam
    n_lo: int
    n_hi: int
    stride: int
    records: list = field(default_factory=list)


class _Comp:
    """Neumaier accumulator for complex block totals."""

    __slots__ = ("re", "im", "cre", "cim")

    def __init__(self):
        self.re = self.im = self.cre = self.cim = 0.0

    def add(self, re: float, im: float):
        s = self.re + re
        if abs(self.re) >= abs(re):
            self.cre += (self.re - s) + re
        else:
            self.cre += (re - s) + self.re
        self.re = s
        s = self.im + im
        if abs(self.im) >= abs(im):
            self.cim += (self.im - s) + im
        else:
            self.cim += (im - s) + self.im
        self.im = s

    def value(self) -> complex:
        return complex(self.re + self.cre, self.im + self.cim)


def step(s: SParam, n: int) -> complex:
    """Single term n^-s with the double-word-reduced angle."""
    if n < 1:
        raise DomainError("step requires n >= 1")
    from .dw import reduce_angle

    r = reduce_angle(s.t, n)
    amp = float(n) ** -s.sigma
    return complex(amp * np.cos(r.theta), amp * np.sin(r.theta))


def partial_sum(s: SParam, N: int) -> complex:
    """Compensated sum of n^-s for n = 1..N."""
    if N < 1:
        raise DomainError("partial_sum requires N >= 1")
    acc = _Comp()
    n = 1
    while n <= N:
        hi = min(N, n + _CHUNK - 1)
        lhi, llo = kernels.log_range(n, hi)
        re, im = kernels.sum_chunk(s.sigma, s.t, n, lhi, llo)
        acc.add(re, im)
        n = hi + 1
    return acc.value()


def partial_sum_range(s: SParam, n_lo: int, n_hi: int) -> complex:
    """Compensated sum of n^-s for n = n_lo..n_hi."""
    if not 1 <= n_lo <= n_hi:
        raise DomainError("need 1 <= n_lo <= n_hi")
    acc = _Comp()
    n = n_lo
    while n <= n_hi:
        hi = min(n_hi, n + _CHUNK - 1)
        lhi, llo = kernels.log_range(n, hi)
        re, im = kernels.sum_chunk(s.sigma, s.t, n, lhi, llo)
        acc.add(re, im)
        n = hi + 1
    return acc.value()


def dump_steps(s: SParam, n_lo: int, n_hi: int, stride: int = 1) -> ArgandStream:
    """Stream of sampled StepRecords whose cumulative fields match
    partial_sum at the same n.

    Records are emitted for n = n_lo, n_lo+stride, ...; the running sum is
    still accumulated over every n, so sampling never changes cumulative
    values. Memory is bounded by the record count, not the range.
    """
    if not 1 <= n_lo <= n_hi:
        raise DomainError("dump_steps requires 1 <= n_lo <= n_hi")
    if stride < 1:
        raise DomainError("stride must be >= 1")
    stream = ArgandStream(s=s, n_lo=n_lo, n_hi=n_hi, stride=stride)
    acc = _Comp()
    if n_lo > 1:
        pre = partial_sum(s, n_lo - 1)
        acc.add(pre.real, pre.imag)
    n = n_lo
    while n <= n_hi:
        hi = min(n_hi, n + _CHUNK - 1)
        lhi, llo = kernels.log_range(n, hi)
        rem, cyc = kernels.reduce_tlog(s.t, lhi, llo)
        amp = np.exp(-s.sigma * lhi)
        re = amp * np.cos(rem)
        im = -amp * np.sin(rem)
        base = acc.value()
        cum_re = base.real + np.cumsum(re)
        cum_im = base.imag + np.cumsum(im)
        picks = list(range((-(n - n_lo)) % stride, hi - n + 1, stride))
        if hi == n_hi and (n_hi - n_lo) % stride and (hi - n) not in picks:
            picks.append(hi - n)  # the final step is always recorded
        for i in picks:
            stream.records.append(StepRecord(
                n=n + i,
                length=float(amp[i]),
                theta=ReducedAngle(float(-rem[i]), int(cyc[i])),
                step=complex(float(re[i]), float(im[i])),
                cumulative=complex(float(cum_re[i]), float(cum_im[i])),
            ))
        cre, cim = kernels.sum_chunk(s.sigma, s.t, n, lhi, llo)
        acc.add(cre, cim)
        n = hi + 1
    return stream
