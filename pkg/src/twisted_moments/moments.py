"""Twisted moments of Dirichlet L-functions at prime moduli, by direct character sums.

For a prime q every non-principal character is primitive, so sums over
primitive characters are sums over t = 1..q-2 in the character table.
All sums over characters are carried out for every twist a at once with a
discrete Fourier transform over the discrete-log index.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import specfun as sf
from .characters import CharacterTable, build_table, parity_mask
from .errors import DomainError, NearPole, NotCoprime, PoleAt

_POLE_MARGIN = 1e-6


@dataclass(frozen=True)
class ReducedFraction:
    a: int
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise DomainError("denominator must be positive")
        if math.gcd(self.a, self.q) != 1:
            raise NotCoprime(self.a, self.q)

    @property
    def canonical(self) -> int:
        return self.a % self.q

    def __float__(self) -> float:
        return self.a / self.q


def _check_coprime(a: int, q: int) -> None:
    if math.gcd(int(a), int(q)) != 1:
        raise NotCoprime(a, q)


@lru_cache(maxsize=2048)
def _l_values_cached(q: int, s: complex) -> np.ndarray:
    table = build_table(q)
    n = table.order
    regular = abs(s - 1) < 1e-14
    hz = sf.hurwitz_grid(s, q, regular=regular)  # zeta(s, r/q), r = 1..q
    u = np.empty(n, dtype=np.complex128)
    u[table.dlog[1:]] = hz[: q - 1]
    out = np.exp(-s * math.log(q)) * n * np.fft.ifft(u)
    if regular:
        out[0] = complex("nan")
    out.setflags(write=False)
    return out


def l_values(q: int, s) -> np.ndarray:
    """L(s, chi_t) for t = 0..q-2; at s = 1 the principal entry is NaN."""
    return _l_values_cached(int(q), complex(s))


def dirichlet_l(table: CharacterTable, t: int, s) -> complex:
    s = complex(s)
    t = int(t) % table.order
    if t == 0 and abs(s - 1) < 1e-14:
        raise PoleAt(1, "principal L-function")
    return complex(l_values(table.modulus, s)[t])


def char_sum(table: CharacterTable, p: np.ndarray) -> np.ndarray:
    """sum_t p[t] chi_t(a) for a = 0..q-1 (entry 0 is 0)."""
    q = table.modulus
    f = table.order * np.fft.ifft(p)
    out = np.zeros(q, dtype=np.complex128)
    out[1:] = f[table.dlog[1:]]
    return out


def _conj_index(order: int) -> np.ndarray:
    return (-np.arange(order)) % order


@lru_cache(maxsize=512)
def _moment_M_grid(q: int) -> np.ndarray:
    table = build_table(q)
    lv = l_values(q, 0.5)
    w = np.abs(lv) ** 2
    w[0] = 0.0
    s = char_sum(table, w.astype(np.complex128))
    vals = math.sqrt(q) / (q - 1) * s
    if np.max(np.abs(vals.imag)) > 1e-9:
        raise ArithmeticError(f"moment M(., {q}) has imaginary part {np.max(np.abs(vals.imag))}")
    out = vals.real.copy()
    out.setflags(write=False)
    return out


def moment_M_grid(q: int) -> np.ndarray:
    """M(a, q) for a = 0..q-1 (index a)."""
    return _moment_M_grid(int(q))


def moment_M(a: int, q: int) -> float:
    build_table(q)  # primality check
    if q < 3:
        raise DomainError("moment_M needs q >= 3")
    _check_coprime(a, q)
    return float(moment_M_grid(q)[a % q])


def _pole_guard(s: complex, z: complex) -> None:
    for w in (s + z, s - z):
        if abs(w - 1) < _POLE_MARGIN:
            raise NearPole(w, "zeta(s +/- z)")


@lru_cache(maxsize=1024)
def _mstar_grid(s: complex, z: complex, q: int, primitive: bool) -> np.ndarray:
    table = build_table(q)
    phi = q - 1
    l_minus = l_values(q, s - z)
    l_plus = l_values(q, s + z)
    p = l_minus[_conj_index(table.order)] * l_plus
    logq = math.log(q)
    zz = sf.riemann_zeta(s + z) * sf.riemann_zeta(s - z)
    if primitive:
        p = p.copy()
        p[0] = 0
        bracket = np.exp((1 - s) * logq) + np.exp(s * logq) - np.exp(z * logq) - np.exp(-z * logq)
    else:
        bracket = np.exp((1 - s) * logq) - np.exp(-s * logq)
    out = np.exp((s - z) * logq) / phi * char_sum(table, p)
    out = out + np.exp(-z * logq) / phi * zz * bracket
    out.setflags(write=False)
    return out


def mstar_grid(s, z, q: int, primitive: bool = False) -> np.ndarray:
    """M*(s, z; a, q) for a = 0..q-1; ``primitive`` picks the primitive-sum form."""
    s, z = complex(s), complex(z)
    _pole_guard(s, z)
    return _mstar_grid(s, z, int(q), bool(primitive))


def moment_Mstar(s, z, a: int, q: int, primitive: bool = False) -> complex:
    _check_coprime(a, q)
    return complex(mstar_grid(s, z, q, primitive)[a % q])


def moment_Mstar_j(j: int, a: int, q: int) -> float:
    """M*_j(a, q) = M*(1/2, j; a, q); real."""
    return moment_Mstar(0.5, j, a, q).real


def bilinear_A(s, z, a: int, q: int) -> complex:
    s, z = complex(s), complex(z)
    q = int(q)
    _check_coprime(a, q)
    for w in (s - z, s + z):
        if abs(w - 1) < _POLE_MARGIN:
            raise PoleAt(w, "bilinear_A")
    f1 = sf.periodic_zeta_grid(s - z, q)
    f2 = sf.periodic_zeta_grid(s + z, q)
    ell = np.arange(1, q + 1)
    return complex(np.sum(f1[ell % q] * f2[(a * ell) % q]) / q)


@lru_cache(maxsize=1024)
def _parity_moment_grid(q: int, sign: int) -> np.ndarray:
    table = build_table(q)
    lv = l_values(q, 0.5)
    w = np.where(parity_mask(table, sign), np.abs(lv) ** 2, 0.0).astype(np.complex128)
    vals = math.sqrt(q) / (q - 1) * char_sum(table, w)
    out = vals.real.copy()
    out.setflags(write=False)
    return out


def parity_moment_grid(q: int, sign: int) -> np.ndarray:
    """(sqrt q / phi) sum over primitive chi with chi(-1) = sign of |L(1/2,chi)|^2 chi(a)."""
    return _parity_moment_grid(int(q), 1 if sign > 0 else -1)


def moment_two_twists(sign: int, h: int, k: int, q: int) -> float:
    build_table(q)
    for x, y in ((h, k), (h, q), (k, q)):
        _check_coprime(x, y)
    a = (h * pow(k, -1, q)) % q
    return float(parity_moment_grid(q, sign)[a])


def parity_split_Mstar(a: int, q: int) -> tuple[float, float]:
    _check_coprime(a, q)
    grid = mstar_grid(0.5, 0, q)
    plus, minus = grid[a % q].real, grid[(-a) % q].real
    return 0.5 * (plus + minus), 0.5 * (plus - minus)


def first_moment_bound_check(q: int) -> float:
    grid = moment_M_grid(q)
    return float(np.sum(np.abs(grid[1:])) / q)


def fourth_moment(q: int, sign: int) -> float:
    """(1/phi) sum over primitive chi of the given parity of |L(1/2, chi)|^4."""
    table = build_table(q)
    lv = l_values(q, 0.5)
    return float(np.sum(np.abs(lv[parity_mask(table, sign)]) ** 4) / (q - 1))
