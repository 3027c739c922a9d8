"""Vertical-line integrals and their closed-form companions.

Integrals (1/2 pi i) int_{(c)} f(w) dw are computed as (1/2 pi) int f(c+it) dt
with the trapezoid rule; every integrand used here decays exponentially in
|t|, so the rule converges spectrally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun as sf
from .errors import DomainError

_ZETA_HALF_SQ = sf.riemann_zeta(0.5).real ** 2


@dataclass(frozen=True)
class LineIntegralSpec:
    abscissa: float = -0.5
    truncation: float = 40.0
    step: float = 0.02

    def __post_init__(self):
        n = self.truncation / self.step
        if abs(n - round(n)) > 1e-9:
            raise DomainError("truncation / step must be an integer")
        if self.truncation < 20 or self.step > 0.05 or self.step <= 0:
            raise DomainError("need truncation >= 20 and 0 < step <= 0.05")

    def nodes(self) -> np.ndarray:
        n = int(round(self.truncation / self.step))
        t = np.arange(-n, n + 1) * self.step
        return self.abscissa + 1j * t

    def integrate(self, values: np.ndarray) -> complex:
        """(1/2 pi i) int f dw from samples on :meth:`nodes`."""
        w = np.full(values.shape, self.step)
        w[0] *= 0.5
        w[-1] *= 0.5
        return complex(np.sum(w * values) / (2 * math.pi))


W_DEFAULT = LineIntegralSpec(-0.5, 40.0, 0.02)
Z_DEFAULT = LineIntegralSpec(0.75, 40.0, 0.02)


def _sign(sign) -> int:
    if sign in ("+", 1, "plus") or (isinstance(sign, int) and sign > 0):
        return 1
    if sign in ("-", -1, "minus") or (isinstance(sign, int) and sign < 0):
        return -1
    raise DomainError(f"bad sign {sign!r}")


def w_integral(sign, x: float, spec: LineIntegralSpec = W_DEFAULT) -> complex:
    sg = _sign(sign)
    if x <= 0:
        raise DomainError("w_integral needs x > 0")
    w = spec.nodes()
    f = (
        sf.gamma(w)
        / np.sin(np.pi * w)
        * sf.zeta_many(0.5 + w) ** 2
        * (np.cos(np.pi * w / 2) + sg * np.sin(np.pi * w / 2))
        * np.exp(-w * math.log(2 * math.pi * x))
    )
    return spec.integrate(f)


def z_integral(sign, s, zarg: float, spec: LineIntegralSpec = Z_DEFAULT) -> complex:
    sg = _sign(sign)
    s = complex(s)
    if zarg <= 0:
        raise DomainError("z_integral needs zarg > 0")
    if not (abs(s.real) < spec.abscissa - 0.5 and spec.abscissa < 1):
        raise DomainError("need |Re s| < abscissa - 1/2 < 1/2")
    w = spec.nodes()
    f = (
        sf.gamma(w)
        * np.cos(np.pi * s)
        / np.sin(np.pi * w)
        * sf.zeta_many(0.5 + w - s)
        * sf.zeta_many(0.5 + w + s)
        * np.exp(-w * math.log(2 * math.pi * zarg))
        * np.exp(sg * 0.5j * np.pi * w)
    )
    return spec.integrate(f)


def r_term(sign, j: int, z: float) -> float:
    sg = _sign(sign)
    if z <= 0:
        raise DomainError("r_term needs z > 0")
    if sg > 0:
        return math.pi / 2 * math.sqrt(z)
    return (math.log(2 * math.pi / z) - sf.digamma(0.5 - j).real - 2 * sf.EULER_GAMMA) * math.sqrt(z)


def g_pm(sign, x: float) -> float:
    """zeta(1/2)^2 (1/2 +- 1/2 - log(x/4)/pi): the double-pole residue at w = 0."""
    sg = _sign(sign)
    if x <= 0:
        raise DomainError("g_pm needs x > 0")
    return _ZETA_HALF_SQ * (0.5 + 0.5 * sg - math.log(x / 4) / math.pi)
