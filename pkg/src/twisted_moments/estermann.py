"""The Estermann function and the reciprocity residuals built from it.

D(s, alpha, h/k) = sum_n sigma_alpha(n) e(n h/k) n^{-s} is continued to the
whole plane through the finite Hurwitz decomposition

    D(s, alpha, h/k) = k^{alpha - s} sum_{m=1}^{k} zeta(s - alpha, m/k) F(s, m h/k),

F being the periodic zeta function (itself a discrete Fourier transform of
Hurwitz values), so a single value costs O(k log k).
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import specfun as sf
from .errors import DivergentSeries, DomainError, NotCoprime, PoleAt

_POLE_MARGIN = 1e-6
_TWO_PI = 2 * math.pi


def _check_coprime(h: int, k: int) -> None:
    if k <= 0 or math.gcd(int(h), int(k)) != 1:
        raise NotCoprime(h, k)


def _pole_check(s: complex, alpha: complex) -> None:
    if abs(s - 1) < _POLE_MARGIN:
        raise PoleAt(1, "Estermann function")
    if abs(s - 1 - alpha) < _POLE_MARGIN:
        raise PoleAt(1 + alpha, "Estermann function")


@lru_cache(maxsize=2048)
def _estermann_grid(s: complex, alpha: complex, k: int) -> np.ndarray:
    """D(s, alpha, h/k) for h = 0..k-1 (entries with gcd(h,k) > 1 are meaningless)."""
    if k == 1:
        out = np.array([sf.riemann_zeta(s) * sf.riemann_zeta(s - alpha)])
    else:
        hz = sf.hurwitz_grid(s - alpha, k)  # zeta(s-alpha, m/k), m = 1..k
        per = sf.periodic_zeta_grid(s, k)  # F(s, r/k), r = 0..k-1
        m = np.arange(1, k + 1)
        h = np.arange(k)
        idx = np.outer(h, m) % k
        out = np.exp((alpha - s) * math.log(k)) * (per[idx] @ hz)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=8192)
def _estermann_single(s: complex, alpha: complex, h: int, k: int) -> complex:
    if k == 1:
        return sf.riemann_zeta(s) * sf.riemann_zeta(s - alpha)
    hz = sf.hurwitz_grid(s - alpha, k)
    per = sf.periodic_zeta_grid(s, k)
    m = np.arange(1, k + 1)
    return complex(np.exp((alpha - s) * math.log(k)) * np.dot(per[(m * h) % k], hz))


def estermann_D(s, alpha, h: int, k: int) -> complex:
    s, alpha = complex(s), complex(alpha)
    h, k = int(h), int(k)
    _check_coprime(h, k)
    _pole_check(s, alpha)
    return _estermann_single(s, alpha, h % k, k)


def estermann_grid(s, alpha, k: int) -> np.ndarray:
    """Vector of D(s, alpha, h/k) over h = 0..k-1."""
    s, alpha = complex(s), complex(alpha)
    _pole_check(s, alpha)
    return _estermann_grid(s, alpha, int(k))


def estermann_Dj(j: int, s, h: int, k: int) -> complex:
    s = complex(s)
    return estermann_D(s + j, 2 * s - 1, h, k)


def eta_value(a: int, q: int) -> complex:
    """1/2 (1-i) D(1/2, 0; a/q) + 1/2 (1+i) D(1/2, 0; -a/q)."""
    return 0.5 * (1 - 1j) * estermann_D(0.5, 0, a, q) + 0.5 * (1 + 1j) * estermann_D(0.5, 0, -a, q)


def dedekind_limit_check(h: int, k: int, eps: float = 1e-3) -> complex:
    """Richardson limit of D(0, -1+eps; h/k) + zeta(1-eps)/2 as eps -> 0."""
    if not (1e-4 <= eps <= 1e-2):
        raise DomainError("eps must lie in [1e-4, 1e-2]")

    def f(e: float) -> complex:
        return estermann_D(0, -1 + e, h, k) + 0.5 * sf.riemann_zeta(1 - e)

    return 2 * f(eps / 2) - f(eps)


# ---------------------------------------------------------------- Eichler series


def _divisor_power_table(n_max: int, alpha: complex) -> np.ndarray:
    out = np.zeros(n_max + 1, dtype=np.complex128)
    d = np.arange(1, n_max + 1, dtype=float)
    powers = np.exp(alpha * np.log(d))
    for dd in range(1, n_max + 1):
        out[dd::dd] += powers[dd - 1]
    return out


@lru_cache(maxsize=64)
def _divisor_cached(n_max: int, alpha: complex) -> np.ndarray:
    arr = _divisor_power_table(n_max, alpha)
    arr.setflags(write=False)
    return arr


def series_S(j: int, s, z) -> complex:
    """(2 pi i)^{-j} sum_n e(n z) sigma_{2s}(n) n^{-s-1/2-j}.

    For real z the series is summed through the Estermann function, which
    requires z to be given as a Fraction.
    """
    s = complex(s)
    if isinstance(z, Fraction):
        if abs(s.real) >= j - 0.5:
            raise DivergentSeries("real z needs |Re s| < j - 1/2")
        return (2j * math.pi) ** (-j) * estermann_D(s + 0.5 + j, 2 * s, z.numerator, z.denominator)
    z = complex(z)
    if z.imag <= 0:
        raise DivergentSeries("series_S needs Im z > 0 (or a Fraction on the real line)")
    y = z.imag
    growth = abs(2 * s.real) + 1
    # smallest N with exp(-2 pi N y) N^growth < 1e-16
    n_max = 1
    while -_TWO_PI * n_max * y + growth * math.log(n_max) > math.log(1e-16) or n_max < 4:
        n_max = int(n_max * 1.5) + 1
    if n_max > 5_000_000:
        raise DivergentSeries(f"Im z = {y} needs {n_max} terms")
    sig = _divisor_cached(n_max, 2 * s)[1:]
    n = np.arange(1, n_max + 1, dtype=float)
    x = z.real % 1.0
    phase = np.exp(2j * math.pi * ((n * x) % 1.0) - _TWO_PI * n * y)
    terms = phase * sig * np.exp(-(s + 0.5 + j) * np.log(n))
    return complex((2j * math.pi) ** (-j) * np.sum(terms))


# ---------------------------------------------------------------- reciprocity residual


def _gamma_zeta_pair(s: complex, log_x: complex) -> complex:
    """Gamma(1/2+s) zeta(1+2s) X^{-1/2-s} + Gamma(1/2-s) zeta(1-2s) X^{-1/2+s}, log X given.

    At s = 0 the two poles cancel and the pair equals
    sqrt(pi) X^{-1/2} (digamma(1/2) + 2 gamma - log X).
    """
    if s == 0:
        return (
            math.sqrt(math.pi)
            * cmath.exp(-0.5 * log_x)
            * (sf.digamma(0.5) + 2 * sf.EULER_GAMMA - log_x)
        )
    return sf.gamma(0.5 + s) * sf.riemann_zeta(1 + 2 * s) * cmath.exp(-(0.5 + s) * log_x) + sf.gamma(
        0.5 - s
    ) * sf.riemann_zeta(1 - 2 * s) * cmath.exp(-(0.5 - s) * log_x)


def _zeta_shift_pair(j: int, s: complex) -> complex:
    return sf.riemann_zeta(0.5 + j + s) * sf.riemann_zeta(0.5 + j - s)


def residual_EN(N: int, s, a: int, q: int, sign: int) -> complex:
    """E_N(s, sign a/q): what is left of D_0(s+1/2, sign a/q) after the reciprocal terms."""
    s = complex(s)
    if abs(s.real) >= 0.5:
        raise DomainError("residual_EN needs |Re s| < 1/2")
    a, q = int(a), int(q)
    _check_coprime(a, q)
    if a <= 0:
        raise DomainError("residual_EN needs a > 0; pass the sign separately")
    sgn = 1 if sign > 0 else -1
    x = a / q
    total = estermann_D(s + 0.5, 2 * s, sgn * a, q)
    ratio = sgn * x / (2j * math.pi)
    for j in range(2 * N + 1):
        coef = (-1) ** j * sf.q_poly(j, s) / math.factorial(j)
        dj = estermann_D(s + 0.5 + j, 2 * s, -sgn * q, a)
        total -= coef * ratio**j * (dj + _zeta_shift_pair(j, s))
    log_x = math.log(_TWO_PI * x) - sgn * 0.5j * math.pi
    total -= _gamma_zeta_pair(s, log_x)
    return total


def residual_EN_upper(N: int, s, z) -> complex:
    """E_N(s, z) for Im z > 0, by the same rearrangement with the Eichler series."""
    s = complex(s)
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("residual_EN_upper needs Im z > 0")
    total = series_S(0, s, z)
    w = -1 / z
    ratio = z / (2j * math.pi)
    for j in range(2 * N + 1):
        coef = (-1) ** j * sf.q_poly(j, s) / math.factorial(j)
        total -= coef * (z**j * series_S(j, s, w) + _zeta_shift_pair(j, s) * ratio**j)
    log_x = math.log(_TWO_PI) + sf.directed_log("minus_i_z", z)
    total -= _gamma_zeta_pair(s, log_x)
    return total


def psi_N(N: int, a: int, q: int, sign: int) -> float:
    sgn = 1 if sign > 0 else -1
    val = 0.5 * (1 - 1j) * residual_EN(N, 0, a, q, sgn) + 0.5 * (1 + 1j) * residual_EN(N, 0, a, q, -sgn)
    if abs(val.imag) > 1e-8 * max(1.0, abs(val.real)):
        raise ArithmeticError(f"psi_N has imaginary part {val.imag}")
    return val.real
