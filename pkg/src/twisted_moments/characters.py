"""Dirichlet characters modulo a prime via a primitive root."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    f = 3
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(q: int) -> int:
    if q == 2:
        return 1
    phi = q - 1
    factors = prime_factors(phi)
    for g in range(2, q):
        if all(pow(g, phi // p, q) != 1 for p in factors):
            return g
    raise DomainError(f"no primitive root mod {q}")


@dataclass(frozen=True)
class CharacterTable:
    modulus: int
    generator: int
    dlog: np.ndarray = field(repr=False)  # dlog[n] for n = 0..q-1; dlog[0] = -1
    order: int

    def index_of(self, n: int) -> int:
        return int(self.dlog[n % self.modulus])


@lru_cache(maxsize=None)
def build_table(q: int) -> CharacterTable:
    q = int(q)
    if not is_prime(q) or q > 100_000:
        raise NotPrime(q)
    g = primitive_root(q)
    dlog = np.full(q, -1, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        dlog[x] = k
        x = (x * g) % q
    dlog.setflags(write=False)
    return CharacterTable(modulus=q, generator=g, dlog=dlog, order=q - 1)


def chi_value(table: CharacterTable, t: int, n: int) -> complex:
    q = table.modulus
    k = int(table.dlog[n % q])
    if k < 0:
        return 0j
    r = (t * k) % table.order
    if 4 * r % table.order == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[4 * r // table.order]
    ang = 2 * math.pi * r / table.order
    return complex(math.cos(ang), math.sin(ang))


def parity(table: CharacterTable, t: int) -> str:
    """'even' if chi_t(-1) = 1, else 'odd'."""
    if table.modulus == 2:
        return "even"
    return "even" if t % 2 == 0 else "odd"


def parity_mask(table: CharacterTable, sign: int) -> np.ndarray:
    """Boolean mask over t = 0..q-2 selecting primitive characters with chi(-1) = sign."""
    t = np.arange(table.order)
    if table.modulus == 2:
        mask = np.zeros(1, dtype=bool)
        return mask
    want_even = sign > 0
    mask = (t % 2 == 0) if want_even else (t % 2 == 1)
    mask[0] = False
    return mask
