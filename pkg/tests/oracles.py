"""Independent reference implementations built on mpmath and sympy."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
from sympy.ntheory import discrete_log, primitive_root

mp.mp.dps = 30


@lru_cache(maxsize=None)
def characters(q: int) -> list[list[complex]]:
    """All characters mod prime q as value lists over n = 0..q-1, principal first."""
    g = primitive_root(q)
    logs = {n: discrete_log(q, n, g) for n in range(1, q)}
    out = []
    for t in range(q - 1):
        row = [0j] + [complex(mp.expjpi(mp.mpf(2 * t * logs[n]) / (q - 1))) for n in range(1, q)]
        out.append(row)
    return out


def l_value(chi: list[complex], s) -> mp.mpc:
    q = len(chi)
    s = mp.mpmathify(s)
    return mp.power(q, -s) * mp.fsum(chi[c] * mp.zeta(s, mp.mpf(c) / q) for c in range(1, q) if chi[c] != 0)


def moment_M(a: int, q: int) -> float:
    chars = characters(q)
    tot = mp.mpf(0)
    for chi in chars[1:]:
        tot += abs(l_value(chi, 0.5)) ** 2 * chi[a % q]
    return float(mp.re(tot) * mp.sqrt(q) / (q - 1))


def moment_Mstar(s, z, a: int, q: int) -> complex:
    s, z = mp.mpmathify(s), mp.mpmathify(z)
    chars = characters(q)
    tot = mp.mpc(0)
    for chi in chars[1:]:
        conj = [c.conjugate() for c in chi]
        tot += l_value(conj, s - z) * l_value(chi, s + z) * chi[a % q]
    tot *= mp.power(q, s - z) / (q - 1)
    corr = mp.power(q, -z) / (q - 1) * (mp.power(q, 1 - s) + mp.power(q, s) - mp.power(q, z) - mp.power(q, -z))
    return complex(tot + corr * mp.zeta(s + z) * mp.zeta(s - z))


def bilinear_A(s, z, a: int, q: int) -> complex:
    """sum over n + a m = 0 (mod q) of n^{-(s-z)} m^{-(s+z)}, via Hurwitz values."""
    s, z = mp.mpmathify(s), mp.mpmathify(z)
    tot = mp.mpc(0)
    for c in range(1, q + 1):
        r = (-a * c) % q or q
        tot += mp.zeta(s + z, mp.mpf(c) / q) * mp.zeta(s - z, mp.mpf(r) / q)
    return complex(tot * mp.power(q, -2 * s))


def estermann_D(s, alpha, h: int, k: int) -> complex:
    """k^{alpha-2s} sum_{a,b mod k} e(abh/k) zeta(s-alpha, a/k) zeta(s, b/k)."""
    s, alpha = mp.mpmathify(s), mp.mpmathify(alpha)
    za = [mp.zeta(s - alpha, mp.mpf(a) / k) for a in range(1, k + 1)]
    zb = [mp.zeta(s, mp.mpf(b) / k) for b in range(1, k + 1)]
    tot = mp.mpc(0)
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            tot += mp.expjpi(mp.mpf(2 * ((a * b * h) % k)) / k) * za[a - 1] * zb[b - 1]
    return complex(tot * mp.power(k, alpha - 2 * s))


def dedekind(h: int, k: int) -> Fraction:
    def saw(x: Fraction) -> Fraction:
        return Fraction(0) if x.denominator == 1 else x - math.floor(x) - Fraction(1, 2)

    return sum((saw(Fraction(m * h, k)) * saw(Fraction(m, k)) for m in range(1, k)), Fraction(0))


def cotangent(h: int, k: int) -> float:
    return float(-mp.fsum(mp.mpf(m) / k * mp.cot(mp.pi * m * h / k) for m in range(1, k) if (2 * m * h) % k))


def euclid(a: int, q: int) -> list[int]:
    out = []
    while q:
        b, r = divmod(a, q)
        out.append(b)
        a, q = q, r
    return out


def r_term(sign: int, j: int, x) -> float:
    x = mp.mpf(x)
    if sign > 0:
        return float(mp.pi / 2 * mp.sqrt(x))
    return float((mp.log(2 * mp.pi / x) - mp.digamma(mp.mpf(1) / 2 - j) - 2 * mp.euler) * mp.sqrt(x))


def psi_tilde(a: int, q: int, sign: int, N: int, mstar0: complex | None = None) -> float:
    """M*_0(+-a, q) minus the reciprocal terms j = 0..N, all from character sums."""
    if mstar0 is None:
        mstar0 = moment_Mstar(0.5, 0, sign * a, q)
    y = -sign * mp.mpf(a) / q
    tot = mp.mpf(0)
    for j in range(N + 1):
        mj = moment_Mstar(0.5, j, -sign * q, a).real
        pair = mp.zeta(mp.mpf(1) / 2 + j) * mp.zeta(mp.mpf(1) / 2 - j)
        tot += mp.binomial(j - mp.mpf(1) / 2, j) * y**j * (mj + pair)
    return float(mstar0.real - tot + r_term(-sign, 0, mp.mpf(q) / a))

