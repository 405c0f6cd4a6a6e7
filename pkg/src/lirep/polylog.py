"""Polylogarithm routes: series, classical integrals, Poisson-kernel
representations, Bernoulli-weight specialisations, odd-zeta integrals,
the trigonometric-moment oracle, inversion, and the dispatcher.

Every route returns a PolylogResult tagged with the representation that
actually produced the value, so independent routes can be compared
against each other point by point.
"""

from __future__ import annotations

import cmath
import math
import threading
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bernoulli import bernoulli_poly
from .clausen import TWO_PI, _bernoulli_parity, _pair_cheapest
from .errors import (
    DomainError,
    ResourceLimitError,
    UnsupportedCombinationError,
)
from .quadrature import QuadratureResult, integrate_adaptive, integrand_with_limits
from .special import gamma_complex

SERIES_TERM_CAP = 1 << 23


class KernelKind(Enum):
    SIN = "sin"
    COS = "cos"
    ALT = "alt"


class RepresentationTag(Enum):
    AUTO = "auto"
    SERIES = "series"
    CLASSICAL_EXP = "classical-exp"
    CLASSICAL_LOG = "classical-log"
    THEOREM_6A = "theorem6a"
    THEOREM_6B = "theorem6b"
    THEOREM_6C = "theorem6c"
    BERNOULLI_7A = "bernoulli7a"
    BERNOULLI_7B = "bernoulli7b"
    BERNOULLI_7C = "bernoulli7c"
    INVERSION_INT = "inversion-int"


@dataclass(frozen=True)
class PolylogRequest:
    s: complex
    z: complex
    representation: RepresentationTag = RepresentationTag.AUTO
    delta: float = 1.0
    tol: float = 1e-10

    def __post_init__(self):
        if self.delta not in (1.0, 0.5):
            raise DomainError("delta must be 1 or 1/2")
        if not self.tol > 0.0:
            raise DomainError("tol must be positive")


@dataclass(frozen=True)
class PolylogResult:
    value: complex
    error_estimate: float
    route: RepresentationTag
    quadrature: QuadratureResult | None = None

    @property
    def converged(self) -> bool:
        return self.quadrature.converged if self.quadrature is not None else True


def _check_disc(z: complex) -> None:
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z):g} is outside the open unit disc")


def kernel(kind: KernelKind, z, t):
    """Poisson-type weights against the common denominator
    D = 1 - 2 z cos(2 pi t) + z^2 (nonzero throughout |z| < 1).

    SIN: 2 z sin(2 pi t) / D; COS: (1 - z^2) / D; ALT: 2 z (cos(2 pi t) - z) / D.
    COS = 1 + ALT identically.
    """
    z = complex(z)
    _check_disc(z)
    ct = np.cos(TWO_PI * np.asarray(t, dtype=float))
    D = 1.0 - 2.0 * z * ct + z * z
    if kind is KernelKind.SIN:
        num = 2.0 * z * np.sin(TWO_PI * np.asarray(t, dtype=float))
    elif kind is KernelKind.COS:
        num = 1.0 - z * z
    else:
        num = 2.0 * z * (ct - z)
    out = num / D
    if np.ndim(t) == 0:
        return complex(out)
    return out


# ---------------------------------------------------------------------------
# Clausen weights at quadrature nodes, memoised per (s, tol).

class _NodeCache:
    def __init__(self, s: complex, tol: float):
        self.s = s
        self.tol = tol
        self.pairs: dict[float, tuple[complex, complex]] = {}

    def channel(self, t_arr: np.ndarray, idx: int) -> np.ndarray:
        out = np.empty(t_arr.shape, dtype=complex)
        for i, t in enumerate(t_arr):
            t = float(t)
            pair = self.pairs.get(t)
            if pair is None:
                pair = _pair_cheapest(self.s, TWO_PI * t, self.tol)
                self.pairs[t] = pair
            out[i] = pair[idx]
        return out


_cache_lock = threading.Lock()
_caches: OrderedDict[tuple[complex, float], _NodeCache] = OrderedDict()
_CACHE_SLOTS = 16


def _node_cache(s: complex, tol: float) -> _NodeCache:
    key = (s, tol)
    with _cache_lock:
        cache = _caches.get(key)
        if cache is None:
            cache = _NodeCache(s, tol)
            _caches[key] = cache
            while len(_caches) > _CACHE_SLOTS:
                _caches.popitem(last=False)
        else:
            _caches.move_to_end(key)
    return cache


def _peak_breakpoints(z: complex, delta: float) -> tuple[float, ...]:
    # Close to the unit circle the kernels spike where |D| is minimal,
    # i.e. at t = +-arg(z)/2pi; bracket the spike with a panel boundary.
    if abs(z) <= 0.95:
        return ()
    tstar = (cmath.phase(z) % TWO_PI) / TWO_PI
    return tuple(p for p in (tstar, 1.0 - tstar) if 0.0 < p < delta)


def _bernoulli_sin_weight(order: int):
    n = (order + 1) // 2
    scale = (-1.0) ** n * TWO_PI ** (2 * n - 1) / (2.0 * math.factorial(2 * n - 1))

    def weight(t):
        return scale * bernoulli_poly(2 * n - 1, t)

    return weight


def _bernoulli_cos_weight(order: int):
    n = order // 2
    scale = (-1.0) ** (n - 1) * TWO_PI ** (2 * n) / (2.0 * math.factorial(2 * n))

    def weight(t):
        return scale * bernoulli_poly(2 * n, t)

    return weight


def _kernel_l1_bound(kind: KernelKind, z: complex) -> float:
    """Bound on int_0^1 |kernel| dt.

    Cauchy-Schwarz against int 1/|1 - z e^{+-2 pi i t}|^2 dt, which equals
    1/(1-|z|^2) by Parseval, gives int 1/|D| <= 1/(1-|z|^2); multiply by
    the sup of the numerator.
    """
    inv = 1.0 / (1.0 - abs(z) ** 2)
    if kind is KernelKind.SIN:
        return 2.0 * abs(z) * inv
    if kind is KernelKind.COS:
        return abs(1.0 - z * z) * inv
    return abs(1.0 - z * z) * inv + 1.0


def _theorem_route(
    s,
    z,
    delta: float,
    tol: float,
    kind: KernelKind,
    tag: RepresentationTag,
    use_bernoulli: bool,
) -> PolylogResult:
    s = complex(s)
    z = complex(z)
    _check_disc(z)
    if delta not in (1.0, 0.5):
        raise DomainError("delta must be 1 or 1/2")
    if z == 0.0:
        # SIN/ALT kernels vanish identically; the COS kernel reduces to 1,
        # whose weight integral vanishes by the mean-value property.
        return PolylogResult(0.0 + 0.0j, 0.0, tag)
    channel = "sin" if kind is KernelKind.SIN else "cos"
    parity = _bernoulli_parity(s)
    closed_form = use_bernoulli and parity == channel
    if s.real <= 1.0 and not closed_form:
        raise DomainError(f"this representation requires Re s > 1, got s = {s}")
    wtol = tol / 10.0
    if closed_form:
        weight = (
            _bernoulli_sin_weight(int(s.real))
            if channel == "sin"
            else _bernoulli_cos_weight(int(s.real))
        )
        weight_err = 0.0
    else:
        cache = _node_cache(s, wtol)
        idx = 0 if channel == "sin" else 1
        weight = lambda t: cache.channel(t, idx)
        # node values carry up to wtol of error each; after the 1/delta
        # scaling that contributes at most wtol * int|kernel| / delta
        weight_err = wtol * _kernel_l1_bound(kind, z) / delta

    def integrand(t):
        return weight(t) * kernel(kind, z, t)

    q = integrate_adaptive(
        integrand,
        0.0,
        delta,
        tol=0.5 * tol * delta,
        breakpoints=_peak_breakpoints(z, delta),
    )
    value = q.value / delta
    return PolylogResult(
        value=value,
        error_estimate=q.error_estimate / delta + weight_err,
        route=tag,
        quadrature=q,
    )


def li_theorem_sin(s, z, delta: float = 1.0, tol: float = 1e-10, use_bernoulli: bool = True) -> PolylogResult:
    """Li_s(z) = (1/delta) int_0^delta S_s(2 pi t) * SIN kernel dt  (Re s > 1, |z| < 1).

    At odd integer s the S_s weight collapses to its exact Bernoulli
    polynomial (including s = 1, where the series weight is unavailable);
    use_bernoulli=False forces the truncated-series weight instead.
    """
    return _theorem_route(s, z, delta, tol, KernelKind.SIN, RepresentationTag.THEOREM_6A, use_bernoulli)


def li_theorem_cos(s, z, delta: float = 1.0, variant: str = "cos", tol: float = 1e-10, use_bernoulli: bool = True) -> PolylogResult:
    """Li_s(z) from the C_s weight against the COS kernel (variant 'cos')
    or the ALT kernel (variant 'alt'); the two differ by int C_s = 0."""
    if variant == "cos":
        kind, tag = KernelKind.COS, RepresentationTag.THEOREM_6B
    elif variant == "alt":
        kind, tag = KernelKind.ALT, RepresentationTag.THEOREM_6C
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _theorem_route(s, z, delta, tol, kind, tag, use_bernoulli)


def li_bernoulli_odd(n: int, z, delta: float = 1.0, tol: float = 1e-10) -> PolylogResult:
    """Li_{2n-1}(z) with the exact B_{2n-1} weight against the SIN kernel."""
    if n < 1:
        raise DomainError("n must be >= 1")
    res = _theorem_route(
        complex(2 * n - 1), z, delta, tol, KernelKind.SIN, RepresentationTag.BERNOULLI_7A, True
    )
    return res


def li_bernoulli_even(n: int, z, delta: float = 1.0, variant: str = "cos", tol: float = 1e-10) -> PolylogResult:
    """Li_{2n}(z) with the exact B_{2n} weight against the COS or ALT kernel."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if variant == "cos":
        kind, tag = KernelKind.COS, RepresentationTag.BERNOULLI_7B
    elif variant == "alt":
        kind, tag = KernelKind.ALT, RepresentationTag.BERNOULLI_7C
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _theorem_route(complex(2 * n), z, delta, tol, kind, tag, True)


# ---------------------------------------------------------------------------
# Series route.

def _series_truncation(s: complex, z: complex, tol: float) -> tuple[int, float]:
    sigma = s.real
    r = abs(z)
    gap_circle = abs(1.0 - z)
    K = 16
    while K <= SERIES_TERM_CAP:
        geo = r ** (K + 1) * (K + 1.0) ** (-sigma) / (1.0 - r)
        bound = geo
        if sigma > 0.0 and gap_circle > 0.0:
            abel = 2.0 * abs(s) / sigma * r ** (K + 1) * K ** (-sigma) / gap_circle
            bound = min(bound, abel)
        if bound <= tol:
            return K, bound
        K *= 2
    raise ResourceLimitError(
        f"series needs more than {SERIES_TERM_CAP} terms at z={z} (too close to 1)"
    )


def li_series(s, z, tol: float = 1e-10) -> PolylogResult:
    """Defining series sum_{k>=1} z^k / k^s, truncated under a rigorous
    tail bound (|z| < 1 strictly, any complex s)."""
    s = complex(s)
    z = complex(z)
    _check_disc(z)
    if z == 0.0:
        return PolylogResult(0.0 + 0.0j, 0.0, RepresentationTag.SERIES)
    K, bound = _series_truncation(s, z, tol)
    value = 0.0 + 0.0j
    chunk = 1 << 21
    for lo in range(1, K + 1, chunk):
        k = np.arange(lo, min(lo + chunk, K + 1), dtype=float)
        powers = np.power(z, k)
        coeff = k ** (-s.real) if s.imag == 0.0 else np.exp(-s * np.log(k))
        value += complex(np.dot(powers, coeff))
    return PolylogResult(value, bound, RepresentationTag.SERIES)


# ---------------------------------------------------------------------------
# Classical integral representations.

def _exp_cutoff(sigma: float, az: float, target: float) -> float:
    T = max(15.0, 2.0 * sigma + 5.0, math.log(max(az, 1.0)) + 10.0)
    while T <= 400.0:
        damp = 1.0 - az * math.exp(-T)
        if damp > 0.0:
            bound = 2.0 * max(T, 1.0) ** (sigma - 1.0) * math.exp(-T) / damp
            if bound <= target:
                return T
        T += 5.0
    raise ResourceLimitError("no finite cutoff reaches the requested tolerance")


def li_integral_classical(s, z, tol: float = 1e-10, form: str = "exp") -> PolylogResult:
    """Classical integral representations (Re s > 0).

    form='exp':  z/Gamma(s) * int_0^inf t^{s-1}/(e^t - z) dt, truncated at a
    cutoff with an analytic tail bound; valid for any z off the real ray
    (1, inf) (z = 1 additionally needs Re s > 1).

    form='log':  z/Gamma(s) * int_0^1 log(1/u)^{s-1}/(1 - z u) du, used on
    the open unit disc.
    """
    s = complex(s)
    z = complex(z)
    if s.real <= 0.0:
        raise DomainError(f"classical representations require Re s > 0, got {s}")
    if z == 0.0:
        tag = RepresentationTag.CLASSICAL_EXP if form == "exp" else RepresentationTag.CLASSICAL_LOG
        return PolylogResult(0.0 + 0.0j, 0.0, tag)
    scale = z / gamma_complex(s)
    if form == "exp":
        if z.imag == 0.0 and z.real > 1.0:
            raise DomainError("exp form is undefined on the cut (1, inf)")
        if z == 1.0 and s.real <= 1.0:
            raise DomainError("z = 1 requires Re s > 1")
        target = 0.5 * tol / abs(scale)
        cutoff = _exp_cutoff(s.real, abs(z), target)

        def integrand(t):
            return t ** (s - 1.0) / (np.exp(t) - z)

        q = integrate_adaptive(integrand, 0.0, cutoff, tol=target)
        tail = target
        return PolylogResult(
            value=scale * q.value,
            error_estimate=abs(scale) * (q.error_estimate + tail),
            route=RepresentationTag.CLASSICAL_EXP,
            quadrature=q,
        )
    if form == "log":
        _check_disc(z)
        target = 0.5 * tol / abs(scale)

        def integrand(u):
            return np.log(1.0 / u) ** (s - 1.0) / (1.0 - z * u)

        q = integrate_adaptive(integrand, 0.0, 1.0, tol=target)
        return PolylogResult(
            value=scale * q.value,
            error_estimate=abs(scale) * q.error_estimate,
            route=RepresentationTag.CLASSICAL_LOG,
            quadrature=q,
        )
    raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# Odd zeta values from the z -> +-1 kernel limits.

def _zeta_odd(kind: str, n: int, delta: float, tol: float) -> tuple[float, QuadratureResult]:
    if n < 1:
        raise DomainError("n must be >= 1")
    if delta not in (1.0, 0.5):
        raise DomainError("delta must be 1 or 1/2")
    pref = (
        (-1.0) ** (n - 1)
        / delta
        * TWO_PI ** (2 * n + 1)
        / (2.0 * math.factorial(2 * n + 1))
    )
    if kind == "tan":
        pref *= 4.0**n / (4.0**n - 1.0)
    f = integrand_with_limits(kind, n)
    q = integrate_adaptive(f, 0.0, delta, tol=tol / abs(pref))
    return pref * q.value.real, q


def zeta_odd_cot(n: int, delta: float = 1.0, tol: float = 1e-10) -> float:
    """zeta(2n+1) from the B_{2n+1}(t) cot(pi t) integral (patched endpoints)."""
    value, _ = _zeta_odd("cot", n, delta, tol)
    return value


def zeta_odd_tan(n: int, delta: float = 1.0, tol: float = 1e-10) -> float:
    """zeta(2n+1) from the B_{2n+1}(t) tan(pi t) integral (patched midpoint)."""
    value, _ = _zeta_odd("tan", n, delta, tol)
    return value


# ---------------------------------------------------------------------------
# Trigonometric-moment oracle for the kernels.

def lemma_integral(
    channel: str,
    kind: KernelKind,
    n: int,
    z,
    delta: float = 1.0,
    tol: float = 1e-11,
) -> complex:
    """int_0^delta {cos | sin}(2 pi n t) * kernel(z, t) dt by quadrature."""
    if kind not in (KernelKind.SIN, KernelKind.COS):
        raise DomainError("the moment identities cover the SIN and COS kernels")
    if channel not in ("cos", "sin"):
        raise ValueError(f"unknown channel {channel!r}")
    if n < 1:
        raise DomainError("n must be >= 1")
    z = complex(z)
    _check_disc(z)
    trig = np.cos if channel == "cos" else np.sin

    def integrand(t):
        return trig(TWO_PI * n * t) * kernel(kind, z, t)

    q = integrate_adaptive(
        integrand, 0.0, delta, tol=tol, breakpoints=_peak_breakpoints(z, delta)
    )
    return q.value


def lemma_expected(channel: str, kind: KernelKind, n: int, z, delta: float = 1.0) -> complex:
    """Exact value of the corresponding moment integral.

    Both kernels give delta * z^n on their matched channel for either delta.
    The mismatched ("zero") channels vanish over the full period only; over
    the half period the sin/cos cross terms survive, and the value follows
    from the kernels' generating expansions:

      int_0^{1/2} cos(2 pi n t) SIN kernel dt = (2/pi) sum_{m+n odd} z^m m/(m^2-n^2)
      int_0^{1/2} sin(2 pi n t) COS kernel dt = [n odd]/(pi n)
                                        + (2n/pi) sum_{m+n odd} z^m/(n^2-m^2)
    """
    z = complex(z)
    _check_disc(z)
    matched = "sin" if kind is KernelKind.SIN else "cos"
    if channel == matched:
        return delta * z**n
    if delta == 1.0:
        return 0.0 + 0.0j
    # half period, mismatched channel: sum the surviving cross terms
    if abs(z) == 0.0:
        acc = 0.0 + 0.0j
    else:
        terms = max(64, int(math.log(1e-14 * (1.0 - abs(z))) / math.log(abs(z))) + 1)
        m = np.arange(1, terms + 1, dtype=float)
        sel = (m.astype(int) + n) % 2 == 1
        m = m[sel]
        zm = np.power(z, m)
        if kind is KernelKind.SIN:
            acc = (2.0 / math.pi) * complex(np.dot(zm, m / (m * m - n * n)))
        else:
            acc = (2.0 * n / math.pi) * complex(np.dot(zm, 1.0 / (n * n - m * m)))
    if kind is KernelKind.COS and n % 2 == 1:
        acc += 1.0 / (math.pi * n)
    return acc


# ---------------------------------------------------------------------------
# Inversion to |z| > 1 at integer order.

def li_inversion_integer(n: int, z, tol: float = 1e-10) -> PolylogResult:
    """Li_n(z) for |z| > 1 from Li_n(1/z) plus a Bernoulli-polynomial term.

    The polynomial argument is written as 1/2 + log(-z)/(2 pi i) with the
    principal logarithm: this equals log(z)/(2 pi i) whenever the branch of
    log z is taken continuous from above (Im log z in (0, 2 pi]), and stays
    correct in the lower half plane where the naive principal log z would
    land on the wrong Bernoulli-polynomial period.
    """
    if n < 0:
        raise DomainError("order must be a nonnegative integer")
    z = complex(z)
    if abs(z) <= 1.0:
        raise DomainError("inversion route requires |z| > 1")
    if z.imag == 0.0 and z.real > 0.0:
        raise DomainError("inversion route is undefined on the cut [1, inf)")
    inner = li_series(n, 1.0 / z, tol=0.5 * tol)
    shifted = 0.5 + cmath.log(-z) / (2.0j * math.pi)
    poly_term = (2.0j * math.pi) ** n / math.factorial(n) * bernoulli_poly(n, shifted)
    value = (-1.0) ** (n - 1) * inner.value - poly_term
    return PolylogResult(
        value=value,
        error_estimate=inner.error_estimate + 8.0 * np.finfo(float).eps * abs(poly_term),
        route=RepresentationTag.INVERSION_INT,
    )


# ---------------------------------------------------------------------------
# Dispatcher.

def _is_nonneg_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real >= 0.0 and s.real == math.floor(s.real)


def _auto_route(s: complex, z: complex) -> RepresentationTag:
    az = abs(z)
    if az <= 0.5:
        return RepresentationTag.SERIES
    if az < 1.0:
        if s.real > 0.0:
            return RepresentationTag.CLASSICAL_EXP
        return RepresentationTag.SERIES
    if az > 1.0:
        if _is_nonneg_integer(s) and s.real >= 1.0:
            return RepresentationTag.INVERSION_INT
        raise UnsupportedCombinationError(
            f"no route for non-integer order s={s} outside the unit disc"
        )
    raise UnsupportedCombinationError("evaluation on |z| = 1 is not supported")


def li_eval(req: PolylogRequest) -> PolylogResult:
    """Evaluate Li_s(z) by the requested representation, or pick one:
    series inside |z| <= 0.5, the classical integral on 0.5 < |z| < 1,
    and integer-order inversion outside the disc."""
    s = complex(req.s)
    z = complex(req.z)
    tag = req.representation
    if tag is RepresentationTag.AUTO:
        tag = _auto_route(s, z)
    if tag is RepresentationTag.SERIES:
        return li_series(s, z, req.tol)
    if tag is RepresentationTag.CLASSICAL_EXP:
        return li_integral_classical(s, z, req.tol, form="exp")
    if tag is RepresentationTag.CLASSICAL_LOG:
        return li_integral_classical(s, z, req.tol, form="log")
    if tag is RepresentationTag.THEOREM_6A:
        return li_theorem_sin(s, z, req.delta, req.tol)
    if tag is RepresentationTag.THEOREM_6B:
        return li_theorem_cos(s, z, req.delta, "cos", req.tol)
    if tag is RepresentationTag.THEOREM_6C:
        return li_theorem_cos(s, z, req.delta, "alt", req.tol)
    if tag is RepresentationTag.BERNOULLI_7A:
        if not (_is_nonneg_integer(s) and s.real >= 1.0 and int(s.real) % 2 == 1):
            raise UnsupportedCombinationError("this route needs odd integer order")
        return li_bernoulli_odd((int(s.real) + 1) // 2, z, req.delta, req.tol)
    if tag in (RepresentationTag.BERNOULLI_7B, RepresentationTag.BERNOULLI_7C):
        if not (_is_nonneg_integer(s) and s.real >= 2.0 and int(s.real) % 2 == 0):
            raise UnsupportedCombinationError("this route needs even integer order")
        variant = "cos" if tag is RepresentationTag.BERNOULLI_7B else "alt"
        return li_bernoulli_even(int(s.real) // 2, z, req.delta, variant, req.tol)
    if tag is RepresentationTag.INVERSION_INT:
        if not _is_nonneg_integer(s):
            raise UnsupportedCombinationError("inversion requires integer order")
        return li_inversion_integer(int(s.real), z, req.tol)
    raise UnsupportedCombinationError(f"unhandled representation {tag}")
