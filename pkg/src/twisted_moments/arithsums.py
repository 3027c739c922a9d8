"""Dedekind, cotangent and Vasyunin sums."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import NotCoprime


def sawtooth(x) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _check(h: int, k: int) -> None:
    if k <= 0 or math.gcd(h, k) != 1:
        raise NotCoprime(h, k)


def dedekind_sum_direct(h: int, k: int) -> Fraction:
    _check(h, k)
    return sum((sawtooth(Fraction(m * h, k)) * sawtooth(Fraction(m, k)) for m in range(1, k)), Fraction(0))


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h/k) through reciprocity and the Euclid algorithm."""
    _check(h, k)
    sign = 1
    h %= k
    total = Fraction(0)
    # s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12
    while k > 1 and h != 0:
        total += sign * (Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k))
        h, k = k % h, h
        sign = -sign
    return total


_PI_L = np.arccos(np.longdouble(-1))


def cotangent_sum(h: int, k: int) -> float:
    """c_0(h/k) = -sum_{m<k} (m/k) cot(pi m h / k)."""
    _check(h, k)
    if k == 1:
        return 0.0
    # extended precision: the terms reach k/pi and cancel heavily
    m = np.arange(1, k)
    r = (m * h) % k
    flip = 2 * r > k
    r = np.where(flip, k - r, r)
    ang = _PI_L * r.astype(np.longdouble) / np.longdouble(k)
    cot = np.cos(ang) / np.sin(ang)
    cot[2 * r == k] = 0
    cot[flip] = -cot[flip]
    return float(-np.sum(m.astype(np.longdouble) * cot) / np.longdouble(k))


def vasyunin_sum(h: int, k: int) -> float:
    """V(h/k) = -c_0(hbar/k)."""
    _check(h, k)
    if k == 1:
        return 0.0
    return -cotangent_sum(pow(h, -1, k), k)
