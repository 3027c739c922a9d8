"""Moment-side reciprocity: Young's error term, the exact series, truncations.

The exact series for M*_0(+-a, q) converges only like 1/j^2, and its terms
are differences of quantities that grow factorially in j. Terms with
j < HEAD_TERMS are taken from the moments directly. Later terms use an
equivalent line integral that is free of cancellation:

    term_j = I_j - Res_j + binom(j-1/2, j) r_{+-,j}(x),
    I_j    = (1/2 pi i) int_{(3/4)} Gamma(j+1/2)^2 / (j! Gamma(j+1-w) sin(pi w)) Phi(w) dw,
    Phi(w) = zeta(1/2+w)^2 (x/2pi)^w (cos(pi w/2) -+ sin(pi w/2)),
    Res_j  = Gamma(j+1/2)^2 zeta(1/2)^2 / (pi j!^2).

The tail is then removed by polynomial extrapolation of the partial sums in 1/J.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import contour
from . import specfun as sf
from .characters import build_table, is_prime
from .errors import DomainError, NonConvergent
from .moments import moment_M_grid, mstar_grid

HEAD_TERMS = 20
_ZETA_HALF_SQ = sf.riemann_zeta(0.5).real ** 2


def _sign(sign) -> int:
    return contour._sign(sign)


def _check_prime_pair(a: int, q: int) -> None:
    for p in (a, q):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    if a == q:
        raise DomainError("a and q must differ")


def young_error(a: int, q: int) -> float:
    _check_prime_pair(a, q)
    if not 2 <= a < q:
        raise DomainError("young_error needs 2 <= a < q")
    m_aq = moment_M_grid(q)[a % q]
    m_qa = moment_M_grid(a)[(-q) % a] if a > 2 else 0.0
    ratio = q / a
    main = math.sqrt(ratio) * (math.log(ratio) + sf.EULER_GAMMA - sf.LOG_8PI)
    corr = _ZETA_HALF_SQ * (
        1 - 2 * math.sqrt(q) / (q - 1) * (1 - q**-0.5) + 2 * math.sqrt(a) / (a - 1) * (1 - a**-0.5)
    )
    return float(m_aq - m_qa - main - corr)


def _mstar_j(j: int, b: int, modulus: int) -> float:
    return mstar_grid(0.5, j, modulus)[b % modulus].real


def _r_flip(sg: int, ratio: float) -> float:
    """r_{-+,0}(ratio): the closing term of the reciprocity formulas."""
    return contour.r_term(-sg, 0, ratio)


def mt_term(j: int, a: int, q: int, sign) -> float:
    """One term of the exact series, computed from the moments directly."""
    sg = _sign(sign)
    x = a / q
    y = -sg * x
    val = y**j * _mstar_j(j, -sg * q, a) + contour.r_term(sg, j, x) - sf.p_poly(j, y).real
    return sf.binom_half(j) * val


def _contour_terms(j_first: int, j_last: int, x: float, sg: int, truncation: float = 60.0, step: float = 0.02) -> np.ndarray:
    spec = contour.LineIntegralSpec(0.75, truncation, step)
    w = spec.nodes()
    phi = (
        sf.zeta_many(0.5 + w) ** 2
        * np.exp(w * math.log(x / (2 * math.pi)))
        * (np.cos(np.pi * w / 2) - sg * np.sin(np.pi * w / 2))
        / np.sin(np.pi * w)
    )
    weights = np.full(w.shape, step)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    phi = phi * weights / (2 * math.pi)
    j = j_first
    ratio = np.exp(2 * math.lgamma(j + 0.5) - math.lgamma(j + 1) - sf.log_gamma(j + 1 - w))
    out = np.empty(j_last - j_first + 1)
    r_plus = sg > 0
    sqrt_x = math.sqrt(x)
    log_part = math.log(2 * math.pi / x) - 2 * sf.EULER_GAMMA
    # digamma(1/2 - j) by downward recurrence
    dig = sf.digamma(0.5 - j).real
    for idx in range(out.size):
        integral = np.sum(ratio * phi).real
        log_res = 2 * math.lgamma(j + 0.5) - 2 * math.lgamma(j + 1)
        res0 = math.exp(log_res) * _ZETA_HALF_SQ / math.pi
        if r_plus:
            r = math.pi / 2 * sqrt_x
        else:
            r = (log_part - dig) * sqrt_x
        out[idx] = integral - res0 + sf.binom_half(j) * r
        # advance j -> j + 1
        ratio = ratio * ((j + 0.5) ** 2 / ((j + 1) * (j + 1 - w)))
        dig = dig - 1.0 / (-0.5 - j)
        j += 1
    return out


def _neville_at_zero(h: list[float], v: list[float]) -> float:
    p = list(v)
    n = len(h)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (h[i] * p[i + 1] - h[i + m] * p[i]) / (h[i] - h[i + m])
    return p[0]


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_estimate: float


def mt_series_rhs(a: int, q: int, sign, j_max: int | None = None, order: int = 4) -> SeriesResult:
    """Right-hand side of the exact reciprocity series for M*_0(+-a, q)."""
    sg = _sign(sign)
    _check_prime_pair(a, q)
    if a >= q:
        raise NonConvergent("the series needs a < q")
    x = a / q
    if j_max is None:
        j_max = max(500, int(math.ceil(150 / x)))
    j_max = max(j_max, 2 * HEAD_TERMS * (order + 1))
    head = np.array([mt_term(j, a, q, sg) for j in range(HEAD_TERMS)])
    tail = _contour_terms(HEAD_TERMS, j_max, x, sg)
    partial = np.cumsum(np.concatenate([head, tail]))
    closing = contour.w_integral(sg, x).real + contour.g_pm(sg, x) - _r_flip(sg, q / a)
    js = [int(round(j_max * (k + 1) / (order + 1))) for k in range(order + 1)]
    hs = [1.0 / j for j in js]
    vals = [float(partial[j]) for j in js]
    limit = _neville_at_zero(hs, vals)
    # difference between two extrapolation orders as a tail-accuracy estimate
    lower = _neville_at_zero(hs[1:], vals[1:])
    return SeriesResult(value=limit + closing, terms_used=j_max + 1, tail_estimate=abs(limit - lower))


def mtc_truncated(a: int, q: int, sign, N: int) -> tuple[float, float]:
    sg = _sign(sign)
    _check_prime_pair(a, q)
    main = _truncated_main(a, q, sg, 2 * N)
    psi = mstar_grid(0.5, 0, q)[(sg * a) % q].real - main
    return main, psi


def _truncated_main(a: int, q: int, sg: int, j_last: int) -> float:
    y = -sg * a / q
    total = 0.0
    for j in range(j_last + 1):
        total += sf.binom_half(j) * y**j * (_mstar_j(j, -sg * q, a) + sf.zeta_pair_half(j))
    return total - _r_flip(sg, q / a)


def psi_tilde(a: int, q: int, sign, N: int) -> float:
    """M*_0(+-a, q) minus the reciprocal terms up to j = N."""
    sg = _sign(sign)
    _check_prime_pair(a, q)
    return float(mstar_grid(0.5, 0, q)[(sg * a) % q].real - _truncated_main(a, q, sg, N))


def psi_tilde_grid(q: int, sign, N: int, a_values) -> np.ndarray:
    return np.array([psi_tilde(a, q, sign, N) for a in a_values])
