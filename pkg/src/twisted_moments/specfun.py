"""Complex special functions in double precision.

Everything here works on Python scalars and, where noted, on numpy arrays.
Hurwitz zeta is the workhorse: Euler-Maclaurin on the right half plane and
the Hurwitz functional equation (through the periodic zeta function) on the
left half plane.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, NumericalOverflow, PoleAt

EULER_GAMMA = 0.57721566490153286061
LOG_2PI = math.log(2 * math.pi)
LOG_8PI = math.log(8 * math.pi)

EM_ORDER = 12


def _bernoulli_even(kmax: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; returns B_2, B_4, ..., B_{2 kmax}
    n_max = 2 * kmax
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return tuple(out)


BERNOULLI = _bernoulli_even(EM_ORDER)
# B_{2k} / (2k)!  as floats, k = 1..K
_EM_COEF = np.array([float(b / math.factorial(2 * (k + 1))) for k, b in enumerate(BERNOULLI)])
_EM_COEF_WIDE = np.array(
    [np.longdouble(b.numerator) / np.longdouble(b.denominator * math.factorial(2 * (k + 1))) for k, b in enumerate(BERNOULLI)]
)

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
_HALF_LOG_2PI = 0.5 * LOG_2PI
_POLE_TOL = 1e-14


def _as_complex_array(s):
    return np.asarray(s, dtype=np.complex128)


def _finish(arr, scalar: bool, what: str):
    if not np.all(np.isfinite(arr)):
        raise NumericalOverflow(f"{what}: non-finite result")
    if scalar:
        return complex(arr.reshape(-1)[0])
    return arr


def _nonpositive_integer_mask(s: np.ndarray, tol: float = _POLE_TOL) -> np.ndarray:
    re = s.real
    return (np.abs(s.imag) <= tol) & (re <= tol) & (np.abs(re - np.round(re)) <= tol)


def _loggamma_lanczos(z: np.ndarray) -> np.ndarray:
    # valid for Re z >= 1/2
    z = z - 1.0
    x = np.full(z.shape, _LANCZOS[0], dtype=np.complex128)
    for i in range(1, len(_LANCZOS)):
        x = x + _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def _loggamma_any(z: np.ndarray) -> np.ndarray:
    out = np.empty(z.shape, dtype=np.complex128)
    right = z.real >= 0.5
    if np.any(right):
        out[right] = _loggamma_lanczos(z[right])
    left = ~right
    if np.any(left):
        zl = z[left]
        out[left] = math.log(math.pi) - np.log(np.sin(np.pi * zl)) - _loggamma_lanczos(1.0 - zl)
    return out


def log_gamma(s):
    """A logarithm of Gamma(s); the imaginary part is only defined mod 2*pi."""
    arr = _as_complex_array(s)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(_nonpositive_integer_mask(arr)):
        raise PoleAt(s, "log_gamma")
    return _finish(_loggamma_any(arr), scalar, "log_gamma")


def gamma(s):
    arr = _as_complex_array(s)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(_nonpositive_integer_mask(arr)):
        raise PoleAt(s, "gamma")
    out = np.empty(arr.shape, dtype=np.complex128)
    right = arr.real >= 0.5
    if np.any(right):
        out[right] = np.exp(_loggamma_lanczos(arr[right]))
    left = ~right
    if np.any(left):
        zl = arr[left]
        out[left] = np.pi / (np.sin(np.pi * zl) * np.exp(_loggamma_lanczos(1.0 - zl)))
    return _finish(out, scalar, "gamma")


def rgamma(s):
    """1/Gamma(s), entire; exactly zero at the non-positive integers."""
    arr = np.atleast_1d(_as_complex_array(s))
    scalar = np.ndim(s) == 0
    poles = _nonpositive_integer_mask(arr)
    out = np.zeros(arr.shape, dtype=np.complex128)
    ok = ~poles
    if np.any(ok):
        out[ok] = 1.0 / gamma(arr[ok])
    return _finish(out, scalar, "rgamma")


def _digamma_scalar(z: complex) -> complex:
    acc = 0j
    if z.real < 0.5:
        # reflection
        return _digamma_scalar(1 - z) - math.pi / cmath.tan(math.pi * z)
    while z.real < 10:
        acc -= 1 / z
        z += 1
    zi2 = 1 / (z * z)
    series = 0j
    p = zi2
    for k, b in enumerate(BERNOULLI, start=1):
        series += float(b) / (2 * k) * p
        p *= zi2
    return acc + cmath.log(z) - 0.5 / z - series


def digamma(s):
    s = complex(s)
    if _nonpositive_integer_mask(np.array([s]))[0]:
        raise PoleAt(s, "digamma")
    if s.imag == 0 and (s.real - 0.5) == round(s.real - 0.5):
        n = int(round(s.real - 0.5))
        val = -EULER_GAMMA - 2 * math.log(2)
        if n >= 0:
            for k in range(n):
                val += 1 / (0.5 + k)
        else:
            x = 0.5
            for _ in range(-n):
                x -= 1
                val -= 1 / x
        return complex(val)
    return _digamma_scalar(s)


# ---------------------------------------------------------------- Hurwitz zeta


def _em_head_length(s: complex) -> int:
    if s.real < -0.5:
        # shorter head: the head sum grows like M^(1 - Re s) and cancels
        return max(10, math.ceil(abs(s) / 3) + 10)
    return 15 + math.ceil(abs(s.imag))


def _power_series_1m(u):
    """(exp(u) - 1)/u, safe near u = 0."""
    u = np.asarray(u, dtype=np.complex128)
    small = np.abs(u) < 1e-5
    out = np.empty(u.shape, dtype=np.complex128)
    big = ~small
    out[big] = np.expm1(u[big]) / u[big]
    us = u[small]
    out[small] = 1 + us / 2 + us * us / 6
    return out


def _hurwitz_em(s: complex, x: np.ndarray, regular: bool = False) -> np.ndarray:
    """Euler-Maclaurin for zeta(s, x) (minus 1/(s-1) when ``regular``)."""
    m = _em_head_length(s)
    if s.real < -0.5:
        # head and tail terms are far larger than the result here; carry
        # the extra bits of extended precision through the cancellation
        out = _hurwitz_em_wide(s, x, m)
        return out.astype(np.complex128)
    n = np.arange(m, dtype=float)
    base = x[:, None] + n[None, :]
    head = np.exp(-s * np.log(base)).sum(axis=1)
    big_n = x + m
    log_n = np.log(big_n)
    n_ms = np.exp(-s * log_n)
    if regular:
        tail = -log_n * _power_series_1m((1 - s) * log_n)
    else:
        tail = big_n * n_ms / (s - 1)
    tail = tail + 0.5 * n_ms
    poch = s
    npow = n_ms / big_n
    inv_n2 = 1.0 / (big_n * big_n)
    corr = np.zeros_like(n_ms)
    for k in range(EM_ORDER):
        corr = corr + _EM_COEF[k] * poch * npow
        poch = poch * (s + 2 * k + 1) * (s + 2 * k + 2)
        npow = npow * inv_n2
    return head + tail + corr


def _hurwitz_em_wide(s: complex, x: np.ndarray, m: int) -> np.ndarray:
    s = np.clongdouble(s)
    x = np.asarray(x, dtype=np.longdouble)
    base = x[:, None] + np.arange(m, dtype=np.longdouble)[None, :]
    head = np.exp(-s * np.log(base)).sum(axis=1)
    big_n = x + m
    n_ms = np.exp(-s * np.log(big_n))
    tail = big_n * n_ms / (s - 1) + n_ms / 2
    poch = s
    npow = n_ms / big_n
    inv_n2 = 1 / (big_n * big_n)
    corr = np.zeros_like(n_ms)
    for k in range(EM_ORDER):
        corr = corr + _EM_COEF_WIDE[k] * poch * npow
        poch = poch * (s + 2 * k + 1) * (s + 2 * k + 2)
        npow = npow * inv_n2
    return head + tail + corr


def _zeta_em_many(s: np.ndarray) -> np.ndarray:
    """zeta(s) by Euler-Maclaurin at x = 1, vectorised over s."""
    m = 15 + int(math.ceil(np.max(np.abs(s.imag)))) if s.size else 15
    n = np.arange(1, m + 1, dtype=float)
    logs = np.log(n)
    head = np.exp(-np.outer(s, logs)).sum(axis=1)
    big_n = float(m + 1)
    log_n = math.log(big_n)
    n_ms = np.exp(-s * log_n)
    tail = big_n * n_ms / (s - 1) + 0.5 * n_ms
    poch = s.copy()
    npow = n_ms / big_n
    corr = np.zeros_like(n_ms)
    for k in range(EM_ORDER):
        corr = corr + _EM_COEF[k] * poch * npow
        poch = poch * (s + 2 * k + 1) * (s + 2 * k + 2)
        npow = npow / (big_n * big_n)
    return head + tail + corr


def zeta_many(s) -> np.ndarray:
    """Riemann zeta on an array of points (no pole checks)."""
    s = np.atleast_1d(_as_complex_array(s))
    out = np.empty(s.shape, dtype=np.complex128)
    right = s.real >= -0.5
    if np.any(right):
        out[right] = _zeta_em_many(s[right])
    left = ~right
    if np.any(left):
        sl = s[left]
        one_minus = 1.0 - sl
        out[left] = (
            2.0 ** sl
            * np.pi ** (sl - 1.0)
            * np.sin(np.pi * sl / 2)
            * gamma(one_minus)
            * _zeta_em_many(one_minus)
        )
    return out


def riemann_zeta(s) -> complex:
    s = complex(s)
    if abs(s - 1) < 1e-14:
        raise PoleAt(1, "riemann_zeta")
    return _finish(zeta_many(np.array([s])), True, "riemann_zeta")


def _hurwitz_fourier(s: complex, x: float) -> complex:
    # Hurwitz's formula, used for Re s < -3 where Euler-Maclaurin cancels badly
    sigma = s.real
    n_terms = int(min(2_000_000, math.ceil((1e17) ** (1.0 / (-sigma)))))
    n = np.arange(1, n_terms + 1, dtype=float)
    w = np.exp((s - 1) * np.log(n))
    ph = 2 * np.pi * ((n * x) % 1.0)
    cos_sum = np.sum(np.cos(ph) * w)
    sin_sum = np.sum(np.sin(ph) * w)
    pref = 2 * complex(gamma(1 - s)) / (2 * math.pi) ** (1 - s)
    return pref * (cmath.sin(math.pi * s / 2) * cos_sum + cmath.cos(math.pi * s / 2) * sin_sum)


def hurwitz_zeta(s, x: float) -> complex:
    s = complex(s)
    x = float(x)
    if not (0.0 < x <= 1.0):
        raise DomainError(f"hurwitz_zeta needs 0 < x <= 1, got {x}")
    if abs(s - 1) < 1e-14:
        raise PoleAt(1, "hurwitz_zeta")
    if x == 1.0:
        return riemann_zeta(s)
    if s.real < -3:
        val = _hurwitz_fourier(s, x)
    else:
        val = complex(_hurwitz_em(s, np.array([x]))[0])
    return _finish(np.array([val]), True, "hurwitz_zeta")


def hurwitz_zeta_regular(s, x: float) -> complex:
    """zeta(s, x) - 1/(s - 1); equals -digamma(x) at s = 1."""
    s = complex(s)
    return complex(_hurwitz_em(s, np.array([float(x)]), regular=True)[0])


@lru_cache(maxsize=4096)
def _hurwitz_grid_cached(s: complex, q: int, regular: bool) -> np.ndarray:
    x = np.arange(1, q + 1, dtype=float) / q
    if s.real >= -0.5 or regular:
        out = _hurwitz_em(s, x, regular=regular)
    else:
        # Hurwitz functional equation through the periodic zeta at 1 - s
        fwd = periodic_zeta_grid(1 - s, q)  # F(1-s, r/q), r = 0..q-1
        r = np.arange(1, q + 1) % q
        f_plus = fwd[r]
        f_minus = fwd[(-r) % q]
        pref = complex(gamma(1 - s)) / (2 * math.pi) ** (1 - s)
        out = pref * (-1j) * (
            cmath.exp(1j * math.pi * s / 2) * f_plus - cmath.exp(-1j * math.pi * s / 2) * f_minus
        )
    out.setflags(write=False)
    return out


def hurwitz_grid(s, q: int, regular: bool = False) -> np.ndarray:
    """zeta(s, r/q) for r = 1..q (index r-1). Read-only, cached."""
    s = complex(s)
    if not regular and abs(s - 1) < 1e-14:
        raise PoleAt(1, "hurwitz_grid")
    return _hurwitz_grid_cached(s, int(q), bool(regular))


@lru_cache(maxsize=4096)
def _periodic_grid_cached(s: complex, q: int) -> np.ndarray:
    hz = _hurwitz_grid_cached(s, q, False)
    v = np.empty(q, dtype=np.complex128)
    v[0] = hz[q - 1]
    v[1:] = hz[: q - 1]
    out = np.exp(-s * math.log(q)) * q * np.fft.ifft(v)
    out.setflags(write=False)
    return out


def periodic_zeta_grid(s, q: int) -> np.ndarray:
    """F(s, r/q) = sum_n e(n r/q) n^{-s} for r = 0..q-1 (index r)."""
    s = complex(s)
    if abs(s - 1) < 1e-14:
        raise PoleAt(1, "periodic_zeta_grid")
    return _periodic_grid_cached(s, int(q))


def periodic_zeta(s, r: int, q: int) -> complex:
    s = complex(s)
    q = int(q)
    if q <= 0:
        raise DomainError("q must be positive")
    r = int(r) % q
    if abs(s - 1) < 1e-14:
        if r == 0:
            raise PoleAt(1, "periodic_zeta")
        # finite at s = 1 off the lattice: -log(1 - e(r/q))
        return -cmath.log(1 - e_of(Fraction(r, q)))
    return complex(periodic_zeta_grid(s, q)[r])


# ---------------------------------------------------------------- elementary


_QUARTERS = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}


def e_of(x) -> complex:
    """e^{2 pi i x}; exact at multiples of 1/4 for real rational input."""
    if isinstance(x, (int, Fraction)):
        frac = Fraction(x) % 1
        if (4 * frac).denominator == 1:
            return _QUARTERS[int(4 * frac)]
        r = float(frac)
        return complex(math.cos(2 * math.pi * r), math.sin(2 * math.pi * r))
    if isinstance(x, complex):
        return cmath.exp(2j * math.pi * x)
    r = float(x) % 1.0
    if (4 * r) == int(4 * r):
        return _QUARTERS[int(4 * r) % 4]
    return complex(math.cos(2 * math.pi * r), math.sin(2 * math.pi * r))


def directed_power(base_kind: str, z, s) -> complex:
    """(i/z)^s or (-i z)^s along the branch continuous on the closed upper half plane."""
    z = complex(z)
    s = complex(s)
    if z == 0:
        raise DomainError("directed_power at z = 0")
    arg = cmath.phase(z)
    if arg < -1e-15 or arg > math.pi + 1e-15:
        raise DomainError(f"arg z = {arg} outside [0, pi]")
    if z.imag == 0 and z.real < 0:
        log_z = complex(math.log(-z.real), math.pi)
    else:
        log_z = cmath.log(z)
    if base_kind == "i_over_z":
        return cmath.exp(s * (0.5j * math.pi - log_z))
    if base_kind == "minus_i_z":
        return cmath.exp(s * (log_z - 0.5j * math.pi))
    raise DomainError(f"unknown base kind {base_kind!r}")


def directed_log(base_kind: str, z) -> complex:
    """Logarithm matching :func:`directed_power`."""
    z = complex(z)
    if z.imag == 0 and z.real < 0:
        log_z = complex(math.log(-z.real), math.pi)
    else:
        log_z = cmath.log(z)
    if base_kind == "i_over_z":
        return 0.5j * math.pi - log_z
    return log_z - 0.5j * math.pi


def q_poly(j: int, s) -> complex:
    s = complex(s)
    out = 1 + 0j
    for ell in range(j):
        out *= (0.5 + ell) ** 2 - s * s
    return out


def half_binom(j: int, ell: int) -> float:
    """binom(j - 1/2, ell - 1/2) = Gamma(j + 1/2) / ((j - ell)! Gamma(ell + 1/2))."""
    return math.exp(math.lgamma(j + 0.5) - math.lgamma(j - ell + 1) - math.lgamma(ell + 0.5))


def binom_half(j: int) -> float:
    """binom(j - 1/2, j) = Gamma(j + 1/2) / (sqrt(pi) j!)."""
    return math.exp(math.lgamma(j + 0.5) - math.lgamma(j + 1)) / math.sqrt(math.pi)


@lru_cache(maxsize=256)
def zeta_pair_half(ell: int) -> float:
    """zeta(1/2 + ell) * zeta(1/2 - ell), real."""
    return (riemann_zeta(0.5 + ell) * riemann_zeta(0.5 - ell)).real


def p_poly(j: int, x) -> complex:
    x = complex(x)
    return sum(half_binom(j, ell) * zeta_pair_half(ell) * x**ell for ell in range(j + 1))


def gauss_2f1_unit(a, b, c) -> complex:
    """Gauss's closed form for 2F1(a, b; c; 1)."""
    a, b, c = complex(a), complex(b), complex(c)
    for arg in (c, c - a - b):
        if _nonpositive_integer_mask(np.array([arg]))[0]:
            raise PoleAt(arg, "gauss_2f1_unit")
    val = gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
    return complex(val)
