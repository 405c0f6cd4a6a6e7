"""Gamma and zeta functions on the complex plane.

Everything here is scalar binary64 work with published coefficient sets;
no external special-function dependency.
"""

from __future__ import annotations

import cmath
import math

from .bernoulli import bernoulli_number
from .errors import DomainError, PoleError

# Lanczos approximation, Godfrey's 15-coefficient set with g = 607/128.
# Roughly 1e-15 relative accuracy on the real axis, ~1e-13 over the
# half-plane we use it on.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _is_real_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real == math.floor(s.real)


def gamma_complex(s) -> complex:
    """Gamma function for complex argument (Lanczos, reflection for Re s < 0.5)."""
    s = complex(s)
    if _is_real_integer(s) and s.real <= 0.0:
        raise PoleError(f"gamma has a pole at s={s.real:g}")
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma_complex(1.0 - s))
    z = s - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z + k)
    w = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * w ** (z + 0.5) * cmath.exp(-w) * acc


def _eta_cvz(s: complex, n: int = 48) -> complex:
    """Alternating zeta sum_{k>=1} (-1)^{k-1} k^{-s}, accelerated.

    Cohen-Rodriguez Villegas-Zagier Chebyshev scheme; the error shrinks
    like (3+sqrt(8))^{-n}, so n=48 leaves enormous headroom in binary64.
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    acc = 0.0 + 0.0j
    for k in range(n):
        c = b - c
        acc += c * (k + 1.0) ** (-s)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return acc / d


def riemann_zeta(s) -> complex:
    """Riemann zeta via the accelerated alternating series (Re s > 0).

    Re s <= 0 is reached through the functional equation. s = 1 is a pole.
    """
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta has a simple pole at s = 1")
    if s.real > 0.0:
        denom = 1.0 - 2.0 ** (1.0 - s)
        if abs(denom) > 1e-3:
            return _eta_cvz(s) / denom
        # Rare eta-zero neighbourhood (s = 1 + 2*pi*i*k/log 2): fall back
        # to the Hurwitz continuation, which has no such artefact.
        return hurwitz_zeta(s, 1.0)
    if s == 0.0:
        return complex(-0.5)
    return (
        2.0**s
        * math.pi ** (s - 1.0)
        * cmath.sin(0.5 * math.pi * s)
        * gamma_complex(1.0 - s)
        * riemann_zeta(1.0 - s)
    )


def hurwitz_zeta(s, a, correction_terms: int = 12) -> complex:
    """Hurwitz zeta sum_{k>=0} (k+a)^{-s}, continued past Re s <= 1.

    Euler-Maclaurin: partial sum to a shift N, then the integral term,
    the half term, and `correction_terms` Bernoulli corrections. Requires
    Re a > 0; accuracy on the supported region is ~1e-11 relative or
    better (the most cancellation-prone cases are Re s < 0 with small a).
    """
    s = complex(s)
    a = complex(a)
    if a.real <= 0.0:
        if a.imag == 0.0 and a.real == math.floor(a.real):
            raise DomainError(f"hurwitz_zeta undefined at a={a.real:g}")
        raise DomainError("hurwitz_zeta requires Re a > 0")
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a simple pole at s = 1")
    # Large shifts sharpen the corrections but feed cancellation when
    # Re s < 0 (the partial sum grows like N^{1-Re s}); keep N small there.
    if s.real >= 0.0:
        shift = max(10, math.ceil(abs(s)) + 10)
    else:
        shift = max(6, math.ceil(abs(s)) + 2)
    terms = [(k + a) ** (-s) for k in range(shift)]
    w = shift + a
    terms.append(w ** (1.0 - s) / (s - 1.0))
    terms.append(0.5 * w ** (-s))
    rising = s  # s(s+1)...(s+2j-2), grown two factors per correction
    winv = 1.0 / w
    wpow = w ** (-s) * winv
    for j in range(1, correction_terms + 1):
        terms.append(
            float(bernoulli_number(2 * j)) / math.factorial(2 * j) * rising * wpow
        )
        rising = rising * (s + (2 * j - 1)) * (s + 2 * j)
        wpow = wpow * winv * winv
    return complex(
        math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
    )
