"""Clausen-type trigonometric sums S_s(x) and C_s(x), three ways.

* direct truncated series with rigorous tail control,
* closed Bernoulli-polynomial forms at integer orders of matching parity,
* the Hurwitz-zeta reflection route.

The three routes are kept independent so they can cross-check each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bernoulli import bernoulli_poly
from .errors import DomainError, ExclusionError, ResourceLimitError
from .special import gamma_complex, hurwitz_zeta, riemann_zeta

TWO_PI = 2.0 * math.pi

#: Hard cap on series length for the direct route.
SERIES_CAP = 1 << 25

_CHUNK = 1 << 21


@dataclass(frozen=True)
class ClausenValue:
    """S_s(x) and C_s(x) evaluated at one (s, x) point."""

    sin_part: complex
    cos_part: complex
    s: complex
    x: float


def _planned_terms(s: complex, sin_half: float, tol: float) -> float:
    """Terms needed for the tail bound to clear tol/2 (may be inf).

    Two rigorous bounds are available: the integral bound
    K^{1-sigma}/(sigma-1) (any x, needs sigma > 1) and the
    summation-by-parts bound |s|/sigma * K^{-sigma} / |sin(x/2)|
    (needs x off the 2*pi lattice, works for sigma > 0). The latter is
    what makes sigma near 1..2 affordable away from the lattice.
    """
    sigma = s.real
    half = 0.5 * tol
    k_int = math.inf
    if sigma > 1.0:
        k_int = (1.0 / ((sigma - 1.0) * half)) ** (1.0 / (sigma - 1.0))
    k_dir = math.inf
    if sin_half > 0.0:
        k_dir = (abs(s) / (sigma * half * sin_half)) ** (1.0 / sigma)
    return min(k_int, k_dir)


def _truncation_index(s: complex, sin_half: float, tol: float) -> int:
    k = _planned_terms(s, sin_half, tol)
    if not math.isfinite(k) or k >= SERIES_CAP:
        raise ResourceLimitError(
            f"Clausen series needs K~{k:.2e} terms at s={s}, x too close to the lattice"
        )
    return int(k) + 1


def _series_pair(s: complex, x: float, tol: float) -> tuple[complex, complex]:
    """(S_s(x), C_s(x)) by truncated summation, chunked for memory."""
    r = math.remainder(x, TWO_PI)
    if r == 0.0:
        return 0.0 + 0.0j, riemann_zeta(s)
    terms = _truncation_index(s, abs(math.sin(0.5 * r)), tol)
    real_s = s.imag == 0.0
    s_acc = 0.0 + 0.0j
    c_acc = 0.0 + 0.0j
    for lo in range(1, terms + 1, _CHUNK):
        hi = min(lo + _CHUNK, terms + 1)
        k = np.arange(lo, hi, dtype=float)
        coeff = k ** (-s.real) if real_s else np.exp(-s * np.log(k))
        kx = k * x
        s_acc += np.dot(coeff, np.sin(kx))
        c_acc += np.dot(coeff, np.cos(kx))
    return complex(s_acc), complex(c_acc)


_REFLECTION_THRESHOLD = 1 << 20


def _pair_cheapest(s: complex, x: float, tol: float) -> tuple[complex, complex]:
    """(S, C) by whichever route is affordable at this point.

    Short series are summed directly; once the truncation index grows
    past a work threshold (slow decay, or x drifting toward the 2*pi
    lattice where both tail bounds explode) the O(1) Hurwitz reflection
    takes over. The reflection is unavailable only within the exclusion
    window of integer orders; there the series is used up to its hard
    cap, beyond which the point is genuinely out of reach.
    """
    r = math.remainder(x, TWO_PI)
    if r == 0.0:
        return _series_pair(s, x, tol)
    k = _planned_terms(s, abs(math.sin(0.5 * r)), tol)
    if k <= _REFLECTION_THRESHOLD:
        return _series_pair(s, x, tol)
    u = (x / TWO_PI) % 1.0
    excluded = _nearest_excluded(s, 0) is not None or _nearest_excluded(s, 1) is not None
    if 0.0 < u < 1.0 and not excluded:
        cv = clausen_via_hurwitz(s, u)
        return cv.sin_part, cv.cos_part
    return _series_pair(s, x, tol)


def _bernoulli_parity(s: complex) -> str | None:
    """'sin' / 'cos' when s is a real integer whose parity admits a closed form."""
    if s.imag != 0.0 or s.real != math.floor(s.real):
        return None
    n = int(s.real)
    if n >= 1 and n % 2 == 1:
        return "sin"
    if n >= 2 and n % 2 == 0:
        return "cos"
    return None


def clausen_bernoulli(channel: str, order: int, x: float) -> float:
    """Closed form for S_order (channel 'sin', odd order) or C_order ('cos', even).

    S_{2n-1}(x) = (-1)^n   (2pi)^{2n-1} / (2 (2n-1)!) * B_{2n-1}(x / 2pi)
    C_{2n}(x)   = (-1)^{n-1} (2pi)^{2n} / (2 (2n)!)   * B_{2n}(x / 2pi)

    Valid on x in [0, 2pi]; order 1 additionally excludes the endpoints,
    where the underlying Fourier expansion fails.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    if not 0.0 <= x <= TWO_PI:
        raise DomainError(f"x={x:g} outside [0, 2*pi]")
    u = x / TWO_PI
    if channel == "sin":
        if order % 2 == 0:
            raise DomainError("sin channel has a Bernoulli form only for odd order")
        if order == 1 and (x == 0.0 or x == TWO_PI):
            raise DomainError("S_1 closed form requires 0 < x < 2*pi")
        n = (order + 1) // 2
        scale = (-1.0) ** n * TWO_PI ** (2 * n - 1) / (2.0 * math.factorial(2 * n - 1))
        return scale * bernoulli_poly(2 * n - 1, u)
    if channel == "cos":
        if order % 2 == 1:
            raise DomainError("cos channel has a Bernoulli form only for even order")
        n = order // 2
        scale = (-1.0) ** (n - 1) * TWO_PI ** (2 * n) / (2.0 * math.factorial(2 * n))
        return scale * bernoulli_poly(2 * n, u)
    raise ValueError(f"unknown channel {channel!r}")


def clausen_direct(s, x: float, tol: float = 1e-12, use_bernoulli: bool = True) -> ClausenValue:
    """S_s(x) and C_s(x) for Re s > 1 by direct summation.

    Each part is within `tol` absolutely. When s is a real integer whose
    parity admits it and `use_bernoulli` is set, that part is delegated to
    the exact closed form (pass use_bernoulli=False to force the raw series
    on both parts, e.g. for cross-checks).
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError(f"clausen_direct requires Re s > 1, got {s}")
    parity = _bernoulli_parity(s) if use_bernoulli else None
    sin_part: complex
    cos_part: complex
    if parity is not None:
        xr = x % TWO_PI
        order = int(s.real)
        if parity == "sin":
            sin_part = complex(clausen_bernoulli("sin", order, xr))
            cos_part = _series_pair(s, x, tol)[1]
        else:
            cos_part = complex(clausen_bernoulli("cos", order, xr))
            sin_part = _series_pair(s, x, tol)[0]
    elif use_bernoulli:
        sin_part, cos_part = _pair_cheapest(s, x, tol)
    else:
        # explicit raw-series request (cross-check paths must not be
        # silently rerouted through the reflection)
        sin_part, cos_part = _series_pair(s, x, tol)
    return ClausenValue(sin_part=sin_part, cos_part=cos_part, s=s, x=x)


_EXCLUSION_WINDOW = 1e-8


def _nearest_excluded(s: complex, parity: int) -> int | None:
    """Nearest integer of given parity (0 even, 1 odd) within the rejection window."""
    if abs(s.imag) > _EXCLUSION_WINDOW:
        return None
    m = round(s.real)
    if m % 2 != parity:
        return None
    lower = 2 if parity == 0 else 3
    if m < lower:
        return None
    if abs(s - m) < _EXCLUSION_WINDOW:
        return m
    return None


def clausen_via_hurwitz(s, t: float) -> ClausenValue:
    """S_s(2*pi*t) and C_s(2*pi*t) through the Hurwitz zeta reflection.

    S picks up csc(pi s/2) against zeta(1-s, t) - zeta(1-s, 1-t), C picks
    up sec(pi s/2) against the sum. Even integer s is excluded for the sin
    part and odd integer s for the cos part (the covering closed Bernoulli
    forms exist exactly there).
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError(f"clausen_via_hurwitz requires Re s > 1, got {s}")
    if not 0.0 < t < 1.0:
        raise DomainError("t must lie strictly inside (0, 1)")
    m = _nearest_excluded(s, 0)
    if m is not None:
        raise ExclusionError(f"sin channel singular at s = {m} (even integer order)")
    m = _nearest_excluded(s, 1)
    if m is not None:
        raise ExclusionError(f"cos channel singular at s = {m} (odd integer order)")
    za = hurwitz_zeta(1.0 - s, t)
    zb = hurwitz_zeta(1.0 - s, 1.0 - t)
    pref = TWO_PI**s / (4.0 * gamma_complex(s))
    half_pi_s = 0.5 * math.pi * s
    sin_part = pref / cmath.sin(half_pi_s) * (za - zb)
    cos_part = pref / cmath.cos(half_pi_s) * (za + zb)
    return ClausenValue(sin_part=sin_part, cos_part=cos_part, s=s, x=TWO_PI * t)


def chebyshev_T(m: int, x: float) -> float:
    """Chebyshev polynomial of the first kind by three-term recurrence."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(m - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur
