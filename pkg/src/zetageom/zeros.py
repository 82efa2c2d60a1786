"""Gram points, critical-line zero scanning and refinement, count estimates,
Lehmer-pair detection, and reference-zero ingestion.

Scanning brackets sign changes of the cheap first-order Z on a grid, then
refines each bracket by bisection on Z to 1e-9 and polishes the result
against a reference projection Re[e^{-i Theta} zeta_ref] (Euler-Maclaurin
backed), so recorded ordinates are ordinates of zeta itself rather than of
the first-order Z approximation. One level of grid halving is applied where
same-sign |Z| minima dip below 0.05 to catch close pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import symmetry, zeta
from .dw import SParam, TWO_PI_HI
from .errors import ConvergenceError, DomainError, ZerosParseError

TWO_PI = TWO_PI_HI


@dataclass(frozen=True)
class ZeroRecord:
    index: int          # ordinal within the producing scan/file
    alpha: float
    source: str         # "computed" | "ingested"
    gram_bracket: Optional[tuple] = None


@dataclass(frozen=True)
class GramPoint:
    n: int
    t: float


def gram_point(n: int) -> GramPoint:
    """t with theta_classical(t) = n*pi, by safeguarded Newton; the phase
    residual at the returned point is below 1e-9."""
    if n < 0:
        raise DomainError("gram_point requires n >= 0")
    target = n * math.pi

    def f(t):
        return symmetry.theta_classical(t) - target

    def fp(t):
        return 0.5 * math.log(t / TWO_PI)

    lo = TWO_PI * 1.001
    hi = max(40.0, TWO_PI * (n + 2.0))
    while f(hi) < 0.0:
        hi *= 1.5
    t = min(max(2.0 * math.pi * (n + 2) / max(math.log(n + 2), 1.0), 20.0), hi)
    for _ in range(50):
        ft = f(t)
        if abs(ft) <= 1e-10:
            return GramPoint(n=n, t=t)
        if ft > 0.0:
            hi = t
        else:
            lo = t
        d = fp(t)
        t_new = t - ft / d if d > 0 else 0.5 * (lo + hi)
        if not lo < t_new < hi:
            t_new = 0.5 * (lo + hi)
        t = t_new
    raise ConvergenceError(f"gram_point({n}) did not converge in 50 iterations")


def zero_count_estimate(T: float, dT: float) -> float:
    """Expected zero count on (T-ish window of width dT):
    dT/(2pi) * log(T/(2pi))."""
    if T <= TWO_PI:
        raise DomainError("zero_count_estimate requires T > 2pi")
    return dT / TWO_PI * math.log(T / TWO_PI)


def _reference_projection(t: float) -> float:
    # Re[e^{-i Theta} zeta_ref], EM-backed: vanishes exactly at zeta zeros
    # and crosses transversally; accuracy ~1e-8 across the supported range.
    N = int(math.ceil(t / math.pi)) + 30
    v = zeta.zeta_em(SParam(0.5, t), N=N, order=16).value
    th = symmetry.theta_rs(t)
    return (v * complex(math.cos(th), -math.sin(th))).real


def _bisect(f, lo: float, hi: float, flo: float, tol: float, maxit: int = 80):
    for _ in range(maxit):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0) != (fm < 0):
            hi = mid
        else:
            lo = mid
            flo = fm
    return 0.5 * (lo + hi)


def _brackets_from_grid(ts: np.ndarray, zs: np.ndarray):
    sign_change = np.nonzero(np.diff(np.signbit(zs)))[0]
    return [(float(ts[i]), float(ts[i + 1]), float(zs[i])) for i in sign_change]


def scan_zeros(t_lo: float, t_hi: float, grid_step: float = 0.02,
               polish: bool = True) -> list:
    """All critical-line zeros in (t_lo, t_hi) as ZeroRecords.

    polish=True (default) moves each Z-refined root onto the zero of the
    reference evaluator; polish=False keeps the raw first-order-Z root.
    """
    if not TWO_PI <= t_lo < t_hi:
        raise DomainError("need 2pi <= t_lo < t_hi")
    if grid_step > 0.1:
        raise DomainError("grid_step must be <= 0.1")
    ts = np.arange(t_lo, t_hi + grid_step, grid_step)
    ts = ts[ts <= t_hi]
    zs = zeta.z_main_many(ts)
    brackets = _brackets_from_grid(ts, zs)

    # close-pair rescue: one halving pass around small same-sign |Z| minima
    for i in range(1, len(ts) - 1):
        if (abs(zs[i]) < 0.05 and abs(zs[i]) <= abs(zs[i - 1])
                and abs(zs[i]) <= abs(zs[i + 1])
                and np.signbit(zs[i - 1]) == np.signbit(zs[i])
                == np.signbit(zs[i + 1])):
            fine = np.arange(ts[i - 1], ts[i + 1] + grid_step / 2,
                             grid_step / 2)
            fz = zeta.z_main_many(fine)
            brackets.extend(_brackets_from_grid(fine, fz))

    roots = []
    for lo, hi, flo in sorted(set(brackets)):
        alpha = _bisect(zeta.z_function, lo, hi, flo, 1e-9)
        if polish:
            alpha = _polish_root(alpha, max(grid_step, 2e-3))
        if t_lo < alpha < t_hi:
            roots.append(alpha)
    roots = sorted(set(roots))
    # collapse duplicates closer than the refinement tolerance
    dedup = []
    for r in roots:
        if not dedup or r - dedup[-1] > 1e-7:
            dedup.append(r)
    return [ZeroRecord(index=i + 1, alpha=a, source="computed")
            for i, a in enumerate(dedup)]


def _polish_root(alpha: float, radius: float) -> float:
    # escalate the bracket until the reference projection changes sign,
    # capped at half the local mean gap so a neighbour is never captured
    f = _reference_projection
    cap = 0.5 * TWO_PI / math.log(max(alpha, 7.0) / TWO_PI)
    r = min(radius, cap)
    while True:
        lo, hi = alpha - r, alpha + r
        flo, fhi = f(lo), f(hi)
        if (flo < 0) != (fhi < 0):
            return _bisect(f, lo, hi, flo, 1e-10)
        if r >= cap:
            return alpha  # reference found no nearby crossing; keep Z root
        r = min(2.0 * r, cap)


def lehmer_scan(t_lo: float, t_hi: float, gap_fraction: float = 0.1,
                records: Optional[Sequence[ZeroRecord]] = None) -> list:
    """Consecutive zero pairs with gap below gap_fraction times the local
    mean gap 2pi/log(t/2pi)."""
    if records is None:
        records = scan_zeros(t_lo, t_hi)
    pairs = []
    for a, b in zip(records, records[1:]):
        mid = 0.5 * (a.alpha + b.alpha)
        mean_gap = TWO_PI / math.log(mid / TWO_PI)
        if b.alpha - a.alpha < gap_fraction * mean_gap:
            pairs.append((a, b))
    return pairs


def ingest_zeros(path) -> list:
    """Read a zeros file: UTF-8, one positive decimal ordinate per line,
    strictly increasing, no header."""
    records = []
    last = -math.inf
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                raise ZerosParseError("blank line", lineno)
            try:
                val = float(text)
            except ValueError:
                raise ZerosParseError(f"not a number: {text!r}", lineno) from None
            if not math.isfinite(val) or val <= 0:
                raise ZerosParseError(f"not a positive ordinate: {text!r}", lineno)
            if val <= last:
                raise ZerosParseError(
                    f"ordinates must be strictly increasing ({val} after {last})",
                    lineno)
            last = val
            records.append(ZeroRecord(index=len(records) + 1, alpha=val,
                                      source="ingested"))
    if not records:
        raise ZerosParseError("empty file", 1)
    return records
