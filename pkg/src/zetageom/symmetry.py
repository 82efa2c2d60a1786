"""The symmetry frame (n_p, p, Theta, theta_sym, Q), conjugate-region
mapping, spiral and pendant center location, and the conjugacy experiments.

Conventions: Theta(t) = -(t/2) log(t/2pi) + t/2 + pi/8 and
theta_sym(t) = -(t/2) log(t/2pi) + t/2 - 3pi/8, both reduced into [0, 2pi);
the classical Riemann-Siegel phase used for Gram points and Z is -Theta.
Q amplitudes and scroll phases use the untruncated x_p = sqrt(t/(2pi)):
integer truncation would inject O(1/n_p) phase noise.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from . import argand
from .dw import (
    DoubleWord,
    SParam,
    _dd_add,
    _dd_add_d,
    _dd_div,
    _dd_mul_d,
    _two_prod,
    _two_sum,
    TWO_PI_HI,
    TWO_PI_MID,
    dw_log_real,
    reduce_angle,
    reduce_dw,
)
from .errors import DomainError

TWO_PI = TWO_PI_HI
PI_DD = (3.141592653589793, 1.2246467991473532e-16)
PI_8_DD = (0.39269908169872414, 1.5308084989341915e-17)
PI_3_8_DD = (1.1780972450961724, 4.592425496802574e-17)
LN_2PI_DD = (1.8378770664093456, -7.756588316134483e-17)

# Lanczos g=7 rational approximation of the factorial function; relative
# error ~1e-13 in the right half plane.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class SymmetryFrame:
    s: SParam
    n_p: int
    p: float
    x_p: float
    Theta: float
    theta_sym: float
    Q_asym: complex
    Q_exact: complex


@dataclass(frozen=True)
class SpiralCenter:
    k: int
    N_k: int
    delta_t: float
    center: complex
    order: int


@dataclass(frozen=True)
class PendantCenter:
    value: complex
    method: str
    L: float
    capped: bool


# ---------------------------------------------------------------------------
# phase functions

def _theta_dd(t: float, const_dd) -> DoubleWord:
    # -(t/2) log(t/2pi) + t/2 + const, in double-word
    xhi, xlo = _dd_div(t, 0.0, TWO_PI_HI, TWO_PI_MID)
    ln = dw_log_real(DoubleWord(xhi, xlo))
    ahi, alo = _dd_mul_d(ln.hi, ln.lo, -(t / 2.0))
    ahi, alo = _dd_add_d(ahi, alo, t / 2.0)
    ahi, alo = _dd_add(ahi, alo, const_dd[0], const_dd[1])
    return DoubleWord(ahi, alo)


def theta_rs_dd(t: float) -> DoubleWord:
    """Theta(t) unreduced, double-word."""
    if t <= 0:
        raise DomainError("Theta requires t > 0")
    return _theta_dd(t, PI_8_DD)


def theta_rs(t: float) -> float:
    """Theta(t) reduced into [0, 2pi)."""
    rem, _ = reduce_dw(theta_rs_dd(t))
    return rem if rem >= 0 else rem + TWO_PI


def theta_sym(t: float) -> float:
    """Symmetry-axis angle, reduced into [0, 2pi). The axis is a line, so
    values are meaningful mod pi."""
    if t <= 0:
        raise DomainError("theta_sym requires t > 0")
    dd = _theta_dd(t, (-PI_3_8_DD[0], -PI_3_8_DD[1]))
    rem, _ = reduce_dw(dd)
    return rem if rem >= 0 else rem + TWO_PI


def theta_classical(t: float) -> float:
    """Unreduced classical phase (t/2) log(t/2pi) - t/2 - pi/8 = -Theta(t);
    Gram points solve theta_classical = n*pi."""
    dd = theta_rs_dd(t)
    return -(dd.hi + dd.lo)


def two_theta_reduced(t: float) -> float:
    """2*Theta(t) mod 2pi in [0, 2pi): the conjugate/original phase sum."""
    dd = theta_rs_dd(t)
    rem, _ = reduce_dw(DoubleWord(2.0 * dd.hi, 2.0 * dd.lo))
    return rem if rem >= 0 else rem + TWO_PI


def series_end(t: float) -> float:
    """The natural series end t/pi - 1/2 (the step conjugate to the origin)."""
    return t / math.pi - 0.5


# ---------------------------------------------------------------------------
# Q(s)

def _lanczos_sum(z: complex) -> complex:
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:]):
        acc += c / (z + i)
    return acc


def _q_exact_signed(sigma: float, t: float) -> complex:
    # (+-2 pi i)^s / Gamma(s), branch following sign(t); log-space assembly
    # with the huge imaginary part reduced in double-word.
    if t < 0:
        return _q_exact_signed(sigma, -t).conjugate()
    lift = 0
    sig = sigma
    extra = 0j
    while sig <= 0.0:  # Gamma recurrence keeps Lanczos in Re z > 0
        extra += cmath.log(complex(sig, t))
        sig += 1.0
        lift += 1
    z = complex(sig, t)
    w_re = sig + _LANCZOS_G - 0.5
    # |w|^2 and log|w| in double-word
    t2hi, t2lo = _two_prod(t, t)
    w2hi, w2lo = _two_prod(w_re, w_re)
    mhi, mlo = _dd_add(t2hi, t2lo, w2hi, w2lo)
    ln_m = dw_log_real(DoubleWord(mhi, mlo))
    lnr_dd = DoubleWord(0.5 * ln_m.hi, 0.5 * ln_m.lo)
    lnr = lnr_dd.hi + lnr_dd.lo
    delta = math.atan2(w_re, t) if t > 0 else 0.0  # pi/2 - arg(w)
    phi = math.atan2(t, w_re)
    ln_a = cmath.log(_lanczos_sum(z))

    re_d = ((sig - 0.5) * (LN_2PI_DD[0] - lnr) - t * delta
            + (sig + _LANCZOS_G - 0.5) - ln_a.real)
    # big imaginary part: t*(ln 2pi - ln r + 1), assembled in double-word
    uhi, ulo = _dd_add(LN_2PI_DD[0], LN_2PI_DD[1], -lnr_dd.hi, -lnr_dd.lo)
    uhi, ulo = _dd_add_d(uhi, ulo, 1.0)
    bhi, blo = _dd_mul_d(uhi, ulo, t)
    small = sig * math.pi / 2.0 - (sig - 0.5) * phi - ln_a.imag
    bhi, blo = _dd_add_d(bhi, blo, small)
    if lift:
        re_d += extra.real - lift * 0.0  # |(2pi i)^s| unaffected by the lift
        bhi, blo = _dd_add_d(bhi, blo, extra.imag)
    rem, _ = reduce_dw(DoubleWord(bhi, blo))
    return math.exp(re_d) * complex(math.cos(rem), math.sin(rem))


def q_exact(s: SParam) -> complex:
    """Q(s) = (2 pi i)^s / (s-1)! via a fixed-coefficient rational factorial
    approximation, phase assembled mod 2pi to avoid cancellation."""
    if s.t <= 0:
        raise DomainError("q_exact requires t > 0")
    return _q_exact_signed(s.sigma, s.t)


def q_asym(s: SParam) -> complex:
    """x_p^{1-2s} e^{i(t+pi/4)} = x_p^{1-2sigma} e^{2i Theta}."""
    x_p = math.sqrt(s.t / TWO_PI)
    return x_p ** (1.0 - 2.0 * s.sigma) * cmath.exp(1j * two_theta_reduced(s.t))


# ---------------------------------------------------------------------------
# frame & conjugate mapping

def frame(s: SParam) -> SymmetryFrame:
    """All symmetry-frame quantities for s; requires t >= 2pi (n_p >= 1)."""
    if s.t < TWO_PI:
        raise DomainError("no symmetry frame below t = 2pi")
    x_p = math.sqrt(s.t / TWO_PI)
    n_p = int(x_p)
    return SymmetryFrame(
        s=s,
        n_p=n_p,
        p=x_p - n_p,
        x_p=x_p,
        Theta=theta_rs(s.t),
        theta_sym=theta_sym(s.t),
        Q_asym=q_asym(s),
        Q_exact=q_exact(s),
    )


def conjugate_range(n: int, fr: SymmetryFrame):
    """Bounds (lo, hi) of the region of steps conjugate to step n <= n_p."""
    if n < 1 or n > fr.n_p:
        raise DomainError("conjugate_range requires 1 <= n <= n_p")
    np2 = float(fr.n_p) ** 2
    return np2 / (n + 0.5), np2 / (n - 0.5)


def multiplicity(n: int, fr: SymmetryFrame) -> float:
    """Conjugate-step count estimate M = n_p^2 / n^2."""
    if n < 1 or n > fr.n_p:
        raise DomainError("multiplicity requires 1 <= n <= n_p")
    return (float(fr.n_p) / n) ** 2


# ---------------------------------------------------------------------------
# centers

def spiral_center(s: SParam, k: int, order: int = 1) -> SpiralCenter:
    """Center of the k-th scroll (where the step angle change is an odd
    multiple of pi): sum to N_k, minus half the last step, plus the
    first-order longitudinal/transverse correction rotated into the frame
    of step N_k."""
    if k < 1:
        raise DomainError("spiral_center requires k >= 1")
    if order not in (0, 1):
        raise DomainError("order must be 0 or 1")
    odd = 2 * k - 1
    phi_hi, phi_lo = _dd_mul_d(PI_DD[0], PI_DD[1], float(odd))
    qhi, qlo = _dd_div(s.t, 0.0, phi_hi, phi_lo)
    N = int(math.floor(qhi + qlo))
    if N < 2:
        raise DomainError(f"N_k = {N} < 2: scroll {k} undefined at t = {s.t}")
    mhi, mlo = _dd_mul_d(phi_hi, phi_lo, float(N))
    dthi, dtlo = _dd_add(s.t, 0.0, -mhi, -mlo)
    delta_t = dthi + dtlo
    theta_n = reduce_angle(s.t, N).theta
    unit = cmath.exp(1j * theta_n)
    amp = float(N) ** -s.sigma
    c = argand.partial_sum(s, N) - 0.5 * amp * unit
    if order == 1:
        c += complex(s.sigma, delta_t) / (4.0 * N ** (1.0 + s.sigma)) * unit
    return SpiralCenter(k=k, N_k=N, delta_t=delta_t, center=c, order=order)


def pendant_center(s: SParam, method: str = "first_order") -> PendantCenter:
    """Center of the pendant P(s).

    first_order: sum to n_p minus e^{-i(t log n_p + 2 pi p)}/(2 n_p^sigma
    cos 2 pi p), with |L| capped at 6^{1/3} n_p^{1/6}/(2 pi) when
    |cos 2 pi p| < 0.1 (p near 1/4 or 3/4).
    sine_law: the osculating-triangle construction; falls back to the capped
    first-order form when its vertex angle degenerates.
    """
    fr_t = s.t
    if fr_t < TWO_PI:
        raise DomainError("pendant_center requires t >= 2pi")
    x_p = math.sqrt(fr_t / TWO_PI)
    n_p = int(x_p)
    p = x_p - n_p
    base = argand.partial_sum(s, n_p)
    theta_np = reduce_angle(fr_t, n_p).theta
    amp = float(n_p) ** -s.sigma

    cap = 6.0 ** (1.0 / 3.0) * n_p ** (1.0 / 6.0) / TWO_PI
    if method == "sine_law":
        d1 = math.pi - 4.0 * math.pi * p + 2.0 * math.pi * (p - 0.5) ** 2 / n_p
        d2 = math.pi - 4.0 * math.pi * p + 2.0 * math.pi * (p + 0.5) ** 2 / n_p
        th2 = math.pi / 2.0 + d2 / 2.0
        th3 = -(d1 + d2) / 2.0  # pi - th1 - th2
        L = (abs(math.sin(th2) / (math.sin(th3) * n_p ** s.sigma))
             if math.sin(th3) != 0.0 else math.inf)
        if L > cap:  # vertex angle collapsing: the construction diverges
            warnings.warn("sine-law vertex angle degenerate; "
                          "falling back to capped first-order pendant")
        else:
            corr = (math.sin(th2) / (math.sin(th3) * n_p ** s.sigma)
                    * cmath.exp(1j * (theta_np - math.pi / 2.0 + d1 / 2.0)))
            return PendantCenter(value=base + corr, method="sine_law",
                                 L=L, capped=False)

    c2p = math.cos(2.0 * math.pi * p)
    L = 1.0 / (2.0 * n_p ** s.sigma * abs(c2p)) if c2p != 0.0 else math.inf
    capped = False
    # the first-order denominator degenerates near p = 1/4, 3/4; engage the
    # pendant-radius cap both inside the spec'd |cos| window and whenever the
    # raw offset exceeds the cap (small n_p reaches that well before 0.1)
    if abs(c2p) < 0.1 or L > cap:
        capped = True
        L = min(L, cap)
    phase = theta_np - 2.0 * math.pi * p
    sign = 1.0 if c2p >= 0 else -1.0
    corr = -sign * L * cmath.exp(1j * phase)
    return PendantCenter(value=base + corr, method="first_order", L=L, capped=capped)


def pendant_radius_cap(n_p: int, p: float) -> float:
    """Positive real root dn of dn^3 - 3 dn^2 + (2 + 6 n_p (1-4p)) dn = 6 n_p,
    the step count that reverses the pendant arc by pi (p=0 gives exactly 1;
    p=1/4 gives ~(6 n_p)^{1/3}). Safeguarded Newton from the cube-root seed."""
    if n_p < 2:
        raise DomainError("pendant_radius_cap requires n_p >= 2")
    b = 2.0 + 6.0 * n_p * (1.0 - 4.0 * p)
    rhs = 6.0 * float(n_p)

    def g(x):
        return ((x - 3.0) * x + b) * x - rhs

    def gp(x):
        return (3.0 * x - 6.0) * x + b

    lo, hi = 0.0, max(2.0, (6.0 * n_p) ** (1.0 / 3.0))
    while g(hi) < 0.0:
        hi *= 2.0
    x = (6.0 * n_p) ** (1.0 / 3.0)
    if not lo < x < hi:
        x = 0.5 * (lo + hi)
    for _ in range(80):
        gx = g(x)
        if gx > 0.0:
            hi = x
        else:
            lo = x
        d = gp(x)
        step_size = gx / d if d != 0 else math.inf
        x_new = x - step_size
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) < 1e-13 * max(1.0, abs(x)):
            return x_new
        x = x_new
    return x


# ---------------------------------------------------------------------------
# conjugacy experiments

def conjugate_ratio_experiment(s: SParam, k_max: int):
    """Ratios Q_k = (center_k - center_{k+1}) / k^{s-1} for k = 1..k_max.

    Each ratio should equal the universal Q(s): amplitude x_p^{1-2sigma},
    phase 2 Theta (mod 2pi); equivalently the raw scroll extent carries phase
    2 Theta - theta_k, the conjugate of original step k.
    """
    fr = frame(s)
    if k_max < 1 or k_max > fr.n_p / 3:
        raise DomainError("need 1 <= k_max <= n_p/3 for spiral validity")
    centers = [spiral_center(s, k, order=1).center for k in range(1, k_max + 2)]
    out = []
    for k in range(1, k_max + 1):
        ext = centers[k - 1] - centers[k]
        if k == 1:
            denom = 1.0 + 0.0j
        else:
            rem, _ = reduce_dw(DoubleWord(*_dd_mul_d(
                *_log_dd_int(k), s.t)))
            denom = k ** (s.sigma - 1.0) * cmath.exp(1j * rem)
        out.append(ext / denom)
    return out


def _log_dd_int(n: int):
    from .dw import dw_log

    v = dw_log(n)
    return v.hi, v.lo


def gaussian_scroll(s: SParam, k: int) -> complex:
    """Closed-form gaussian value of the k-th conjugate region:
    x_p^{1-2sigma} k^{1-sigma} e^{i(2 Theta - (pi/4)(k/n_p)^2)}; analytic
    cross-check of conjugate_ratio_experiment. The tilt ratio uses the
    integer n_p so it vanishes identically at k = n_p."""
    if k < 1:
        raise DomainError("gaussian_scroll requires k >= 1")
    x_p = math.sqrt(s.t / TWO_PI)
    n_p = int(x_p)
    if (x_p / k) ** 2 < 5.0:
        warnings.warn(f"gaussian_scroll: M = (x_p/k)^2 = {(x_p / k) ** 2:.2f} < 5; "
                      "integral approximation degraded")
    amp = x_p ** (1.0 - 2.0 * s.sigma) * k ** (1.0 - s.sigma)
    phase = two_theta_reduced(s.t) - math.pi / 4.0 * (float(k) / n_p) ** 2
    return amp * cmath.exp(1j * phase)
