"""Prime machinery, Landau ensemble sums, the primes-to-zeros inversion,
the Euler product, and Hurwitz/Dirichlet generalizations.

The Landau table records, per step n, the ensemble sum of unit-step
direction cosines sum_gamma cos(gamma log n) over all zero ordinates
gamma <= T: at primes this averages to -T log p / (2 pi sqrt p), elsewhere
it stays O(log T).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels, zeta
from .dw import SParam, TWO_PI_HI
from .errors import DomainError

TWO_PI = TWO_PI_HI
_SIEVE_MAX = 100_000_000


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    values: tuple  # chi(n) for n = 0..k-1, value at index n % k
    principal: bool

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]


@dataclass(frozen=True)
class LandauTable:
    T: float
    step_changes: tuple  # ((n, change), ...)

    def cumulative(self):
        out = []
        acc = 0.0
        for n, ch in self.step_changes:
            acc += ch
            out.append((n, acc))
        return out


def sieve(N: int) -> np.ndarray:
    """Primes <= N (ascending int64)."""
    if N < 2:
        return np.empty(0, dtype=np.int64)
    if N > _SIEVE_MAX:
        raise DomainError(f"sieve bounded at {_SIEVE_MAX}")
    flags = np.ones(N + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, int(N**0.5) + 1):
        if flags[i]:
            flags[i * i::i] = False
    return np.nonzero(flags)[0].astype(np.int64)


@lru_cache(maxsize=8)
def _sieve_cached(N: int):
    return sieve(N)


def mangoldt(n: int) -> float:
    """Von Mangoldt Lambda(n): log p when n = p^k, else 0."""
    if n < 1:
        raise DomainError("mangoldt requires n >= 1")
    if n == 1:
        return 0.0
    p = None
    m = n
    for q in range(2, int(math.isqrt(n)) + 1):
        if m % q == 0:
            p = q
            break
    if p is None:
        return math.log(n)  # n itself prime
    while m % p == 0:
        m //= p
    return math.log(p) if m == 1 else 0.0


def is_prime_power(n: int) -> bool:
    return n >= 2 and mangoldt(n) > 0.0


def landau_cosine_sum(x_grid: Sequence[float], zeros: Sequence[float]) -> np.ndarray:
    """f(x) = sum_i cos(alpha_i log x) per grid point; minima sit at primes
    and prime powers (depth falling off as 1/k at p^k)."""
    x = np.asarray(x_grid, dtype=np.float64)
    if np.any(x <= 1.0):
        raise DomainError("landau_cosine_sum requires x > 1")
    zs = np.asarray(zeros, dtype=np.float64)
    if zs.size == 0:
        return np.zeros_like(x)
    return np.cos(np.outer(np.log(x), zs)).sum(axis=1)


def ensemble_real_sum(zeros: Sequence[float], N_max: int) -> LandauTable:
    """Per-step ensemble changes sum_gamma cos(gamma log n) for n <= N_max
    over all supplied zero ordinates (complete up to T = max ordinate)."""
    zs = np.asarray(sorted(zeros), dtype=np.float64)
    if zs.size == 0:
        raise DomainError("ensemble_real_sum requires zeros")
    changes = [(1, float(zs.size))]  # every diagram starts with step 1 = 1+0i
    for n in range(2, N_max + 1):
        ln = math.log(n)
        changes.append((n, float(np.sum(np.cos(zs * ln)))))
    return LandauTable(T=float(zs[-1]), step_changes=tuple(changes))


def prime_step_prediction(T: float, p: int) -> float:
    """Landau average of the ensemble change at a prime step:
    -T log p / (2 pi sqrt p)."""
    return -T * math.log(p) / (TWO_PI * math.sqrt(p))


def invert_primes_to_zeros(y_grid: Sequence[float], p_min: int, P_max: int) -> np.ndarray:
    """sum_p cos(y log p) over primes in [p_min, P_max] per grid ordinate;
    deep minima approximate the zeta zeros."""
    if p_min < 2:
        raise DomainError("p_min must be >= 2")
    if P_max < 100 * p_min:
        raise DomainError("need P_max >= 100 * p_min")
    y = np.asarray(y_grid, dtype=np.float64)
    ps = _sieve_cached(P_max)
    ps = ps[ps >= p_min]
    if ps.size == 0:
        return np.zeros_like(y)
    out = np.zeros_like(y)
    for chunk in np.array_split(np.log(ps.astype(np.float64)),
                                max(1, ps.size // 2048)):
        out += np.cos(np.outer(y, chunk)).sum(axis=1)
    return out


def minima_candidates(y_grid: Sequence[float], values: Sequence[float]) -> list:
    """Ordinates of local minima lying below the mean minima level: the
    zero-candidate extraction for invert_primes_to_zeros."""
    y = np.asarray(y_grid, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    idx = [i for i in range(1, len(v) - 1) if v[i] <= v[i - 1] and v[i] <= v[i + 1]]
    if not idx:
        return []
    level = float(np.mean(v[idx]))
    return [float(y[i]) for i in idx if v[i] < level]


def euler_product(s: SParam, P_max: int) -> complex:
    """Partial Euler product over primes <= P_max; sigma > 1 only."""
    if s.sigma <= 1.0:
        raise DomainError("euler_product requires sigma > 1")
    ps = _sieve_cached(int(P_max))
    if ps.size == 0:
        return 1.0 + 0.0j
    lhi, llo = kernels.log_range(1, int(ps[-1]))
    idx = ps - 1
    rem, _ = kernels.reduce_tlog(s.t, lhi[idx], llo[idx])
    amp = np.exp(-s.sigma * lhi[idx])
    terms = 1.0 - amp * np.exp(-1j * rem)
    # product via summed logs: stable for big P_max
    return cmath.exp(-complex(np.sum(np.log(terms))))


def hurwitz(s: SParam, a: float) -> complex:
    """Hurwitz zeta(s, a) = sum (n+a)^-s by geometric continuation: steps of
    length (n+a)^-sigma and angle -t log(n+a), truncated where the step
    angle change reaches -pi, with the same midpoint and first-order
    corrections as the k=1 scroll. Convergent/low-t arguments delegate to
    an Euler-Maclaurin tail. a = 1 reproduces zeta exactly."""
    if not 0.0 < a <= 1.0:
        raise DomainError("hurwitz requires 0 < a <= 1")
    if s.t < 10.0 and s.sigma <= 1.0:
        raise DomainError("hurwitz needs t >= 10 or sigma > 1")
    if s.sigma > 1.2 or s.t < 10.0:
        return _hurwitz_em(s, a)
    N = int(math.floor(s.t / math.pi - a))
    if N < 2:
        raise DomainError("t too small for the geometric truncation")
    sc = s.as_complex()
    x = np.arange(0, N + 1, dtype=np.float64) + a
    ang = (s.t * np.log(x)) % TWO_PI
    total = complex(np.sum(np.exp(-s.sigma * np.log(x)) * np.exp(-1j * ang)))
    xe = N + a
    last = xe ** -s.sigma * cmath.exp(-1j * ((s.t * math.log(xe)) % TWO_PI))
    delta_t = s.t - math.pi * xe
    unit = last / abs(last)
    total -= 0.5 * last
    total += complex(s.sigma, delta_t) / (4.0 * xe ** (1.0 + s.sigma)) * unit
    return total


def _hurwitz_em(s: SParam, a: float, order: int = 12) -> complex:
    sc = s.as_complex()
    N = max(60, int(2.0 * s.t / TWO_PI) + 10)
    x = np.arange(0, N + 1, dtype=np.float64) + a
    ang = (s.t * np.log(x)) % TWO_PI
    total = complex(np.sum(x ** -s.sigma * np.exp(-1j * ang)))
    xe = complex(N + a, 0.0)
    xs = xe ** -sc
    total -= 0.5 * xs
    total += xs * xe / (sc - 1.0)
    poly = sc
    bern = zeta._BERNOULLI
    for k in range(1, order // 2 + 1):
        if k > 1:
            poly = poly * (sc + 2 * k - 3) * (sc + 2 * k - 2)
        total += bern[2 * k] / math.factorial(2 * k) * poly * xs * xe ** (1 - 2 * k)
    return total


def _reduced_residues(k: int):
    return [r for r in range(1, k + 1) if math.gcd(r, k) == 1]


def _prime_power_factors(k: int):
    out = []
    m = k
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def _component_generators(q: int, e: int):
    """Generators and orders of (Z/q^e)* as a list of (gen, order)."""
    mod = q ** e
    if q == 2:
        if e == 1:
            return []
        if e == 2:
            return [(3, 2)]
        return [(mod - 1, 2), (3, 2 ** (e - 2))]
    phi = q ** (e - 1) * (q - 1)
    for g in range(2, mod):
        if math.gcd(g, mod) != 1:
            continue
        seen = 1
        x = g
        while x != 1:
            x = x * g % mod
            seen += 1
        if seen == phi:
            return [(g, phi)]
    raise ArithmeticError(f"no generator found mod {mod}")


def characters(k: int) -> list:
    """All Dirichlet characters mod k, built from the cyclic structure of
    the reduced-residue group (CRT across prime-power components)."""
    if k < 1:
        raise DomainError("characters requires k >= 1")
    if k == 1:
        return [DirichletCharacter(1, (1.0 + 0.0j,), True)]
    comps = []  # (modulus q^e, [(gen, order), ...])
    for q, e in _prime_power_factors(k):
        comps.append((q ** e, _component_generators(q, e)))
    # discrete logs per component
    dlogs = []
    for mod, gens in comps:
        table = {}
        idx_vectors = {}
        # enumerate products of generator powers
        def rec(i, val, vec):
            if i == len(gens):
                idx_vectors[val] = tuple(vec)
                return
            g, order = gens[i]
            x = 1
            for j in range(order):
                rec(i + 1, val * pow(g, j, mod) % mod, vec + [j])
        rec(0, 1, [])
        dlogs.append((mod, gens, idx_vectors))

    residues = _reduced_residues(k)
    chars = []
    orders = [order for _, gens, _ in dlogs for _, order in gens]
    # character index ranges over all tuples of exponents
    def char_tuples(i):
        if i == len(orders):
            yield ()
            return
        for rest in char_tuples(i + 1):
            for j in range(orders[i]):
                yield (j,) + rest
    for exps in sorted(char_tuples(0)):
        vals = [0j] * k
        principal = all(e == 0 for e in exps)
        for n in residues:
            pos = 0
            phase = 0.0
            ok = True
            for mod, gens, idx_vectors in dlogs:
                vec = idx_vectors.get(n % mod)
                if vec is None:
                    ok = False
                    break
                for (g, order), v in zip(gens, vec):
                    phase += exps[pos] * v / order
                    pos += 1
            if not ok:
                continue
            vals[n % k] = cmath.exp(2j * math.pi * phase)
        chars.append(DirichletCharacter(k, tuple(vals), principal))
    return chars


def l_function(s: SParam, chi: DirichletCharacter) -> complex:
    """L(s, chi) = k^-s sum_r chi(r) zeta(s, r/k); the k^-s factor is
    required for the Hurwitz decomposition to match the Dirichlet series.
    The conditionally-convergent point s = 1 (non-principal chi) is summed
    directly over full periods."""
    k = chi.modulus
    if k == 1:
        return zeta.zeta_geometric(s).value
    if s.t < 10.0 and s.sigma <= 1.0:
        if chi.principal:
            raise DomainError("principal character diverges at sigma <= 1")
        n = np.arange(1, 1_000_001, dtype=np.float64)
        vals = np.array([chi(i) for i in range(k)], dtype=np.complex128)
        return complex(np.sum(vals[(n.astype(np.int64)) % k] * n ** -complex(s.sigma, s.t)))
    total = 0.0 + 0.0j
    for r in range(1, k + 1):
        c = chi(r)
        if c != 0:
            total += c * hurwitz(s, r / k)
    # k^{-s} with the reduced phase
    rem = (s.t * math.log(k)) % TWO_PI
    return total * k ** -s.sigma * cmath.exp(-1j * rem)
