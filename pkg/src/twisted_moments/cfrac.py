"""Continued fractions and the Euclid-chain evaluations of the twisted moments."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import specfun as sf
from .characters import is_prime
from .errors import DomainError, NotCoprime, PreconditionFailed
from .estermann import psi_N, residual_EN
from .moments import moment_two_twists

_ZETA_HALF_SQ = sf.riemann_zeta(0.5).real ** 2


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: tuple[int, ...]
    conv_num: tuple[int, ...]
    conv_den: tuple[int, ...]

    @classmethod
    def from_quotients(cls, quotients) -> "ContinuedFraction":
        qs = tuple(int(b) for b in quotients)
        if not qs:
            raise DomainError("empty continued fraction")
        if qs[0] < 0 or any(b <= 0 for b in qs[1:]):
            raise DomainError(f"bad partial quotients {qs}")
        nums, dens = [], []
        p_prev, p = 1, qs[0]
        v_prev, v = 0, 1
        nums.append(p)
        dens.append(v)
        for b in qs[1:]:
            p_prev, p = p, b * p + p_prev
            v_prev, v = v, b * v + v_prev
            nums.append(p)
            dens.append(v)
        return cls(qs, tuple(nums), tuple(dens))

    @property
    def kappa(self) -> int:
        return len(self.quotients) - 1

    def value(self) -> Fraction:
        return Fraction(self.conv_num[-1], self.conv_den[-1])

    def den(self, j: int) -> int:
        """v_j with v_{-1} = 0."""
        return 0 if j < 0 else self.conv_den[j]

    def __str__(self) -> str:
        head, tail = self.quotients[0], self.quotients[1:]
        return f"{head};" + ",".join(str(b) for b in tail)


def expand(a: int, q: int) -> ContinuedFraction:
    a, q = int(a), int(q)
    if q <= 0 or a < 0:
        raise DomainError("expand needs q > 0 and a >= 0")
    if math.gcd(a, q) != 1:
        raise NotCoprime(a, q)
    qs = []
    num, den = a, q
    while den:
        b, r = divmod(num, den)
        qs.append(b)
        num, den = den, r
    return ContinuedFraction.from_quotients(qs)


def adjust_parity(cf: ContinuedFraction, want_even: bool) -> ContinuedFraction:
    if (cf.kappa % 2 == 0) == bool(want_even):
        return cf
    qs = list(cf.quotients)
    if cf.kappa >= 1 and qs[-1] == 1:
        qs.pop()
        qs[-1] += 1
    elif (cf.kappa >= 1 and qs[-1] >= 2) or (cf.kappa == 0 and qs[0] >= 1):
        qs[-1] -= 1
        qs.append(1)
    else:
        raise DomainError("cannot change the parity of this expansion")
    return ContinuedFraction.from_quotients(qs)


def canonical(cf: ContinuedFraction) -> ContinuedFraction:
    """Merge a trailing partial quotient 1 (the form with b_kappa >= 2)."""
    if cf.kappa >= 1 and cf.quotients[-1] == 1:
        qs = list(cf.quotients[:-1])
        qs[-1] += 1
        return ContinuedFraction.from_quotients(qs)
    return cf


def reversal_identity_check(a: int, q: int) -> bool:
    if q == 1:
        return True
    cf = expand(a, q)
    k = cf.kappa
    target = Fraction(((-1) ** (k + 1) * pow(a, -1, q)) % q, q)
    rev = ContinuedFraction.from_quotients([0] + list(reversed(cf.quotients[1:])))
    return rev.value() == target


def _chain_ratios(cf: ContinuedFraction):
    for j in range(1, cf.kappa + 1):
        yield j, cf.den(j - 1), cf.den(j)


def _analytic_parts(cf: ContinuedFraction) -> tuple[float, float]:
    """(sum sqrt(r)(L - pi/2)/2, sum (-1)^j sqrt(r)(L + pi/2)/2) with r = v_j/v_{j-1}."""
    even_part = 0.0
    odd_part = 0.0
    for j, lo, hi in _chain_ratios(cf):
        r = hi / lo
        lg = math.log(r) + sf.EULER_GAMMA - sf.LOG_8PI
        even_part += 0.5 * math.sqrt(r) * (lg - math.pi / 2)
        odd_part += 0.5 * (-1) ** j * math.sqrt(r) * (lg + math.pi / 2)
    return even_part, odd_part


def exact_D_formula(a: int, q: int, sign) -> complex:
    """D(1/2, 0; +-a/q) assembled along the Euclid chain of a/q."""
    sg = 1 if sign in (1, "+") or (isinstance(sign, int) and sign > 0) else -1
    a, q = int(a) % int(q), int(q)
    cf = expand(a, q)
    re_part, alt_part = _analytic_parts(cf)
    total = complex(_ZETA_HALF_SQ * (cf.kappa + 1) + re_part, -sg * alt_part)
    for j, lo, hi in _chain_ratios(cf):
        total += residual_EN(0, 0, lo, hi, -sg * (-1) ** j)
    return total


def rhs_Ypo(a: int, q: int, sign, expansion: ContinuedFraction | None = None) -> float:
    """M*_0(+-a, q) from the continued fraction of a/q and psi_0 along its convergents.

    ``expansion`` may supply a non-canonical expansion of a/q (trailing 1).
    """
    sg = 1 if sign in (1, "+") or (isinstance(sign, int) and sign > 0) else -1
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    a = int(a) % q
    cf = expand(a, q) if expansion is None else expansion
    if cf.value() != Fraction(a, q):
        raise DomainError("expansion does not represent a/q")
    re_part, alt_part = _analytic_parts(cf)
    total = _ZETA_HALF_SQ * (cf.kappa + 1) + re_part - sg * alt_part
    for j, lo, hi in _chain_ratios(cf):
        total += psi_N(0, lo, hi, -sg * (-1) ** j)
    return total


def quotient_sums(a: int, q: int) -> tuple[float, float]:
    """(sum over odd j of sqrt(b_j)(log b_j + gamma - log 8pi), sum over even j of sqrt(b_j))."""
    cf = expand(int(a) % int(q), int(q))
    odd = even = 0.0
    for j in range(1, cf.kappa + 1):
        b = cf.quotients[j]
        if j % 2:
            odd += math.sqrt(b) * (math.log(b) + sf.EULER_GAMMA - sf.LOG_8PI)
        else:
            even += math.sqrt(b)
    return odd, even


def f_pm(sign, a: int, q: int) -> float:
    sg = 1 if sign in (1, "+") or (isinstance(sign, int) and sign > 0) else -1
    if not 1 <= a <= q:
        raise DomainError("f_pm needs 1 <= a <= q")
    cf = expand(a, q) if a < q else expand(0, 1)
    total = 0.0
    for j in range(1, cf.kappa + 1):
        b = cf.quotients[j]
        total += sg**j * math.sqrt(b) * (math.log(b) + sf.EULER_GAMMA - sf.LOG_8PI - sg * math.pi / 2)
    return total


def two_twist_cf_structure(h: int, k: int, q: int):
    """Split the expansion of {h kbar / q} around its large middle quotient.

    Returns (left, middle, right): left expands {-h qbar / k} with even length,
    right expands {-k qbar / h} with even length, and the expansion of
    {h kbar / q} is left + [middle] + reversed(right).
    """
    h, k, q = int(h), int(k), int(q)
    for x, y in ((h, k), (h, q), (k, q)):
        if math.gcd(x, y) != 1:
            raise NotCoprime(x, y)
    if q < 4 * h * k:
        raise PreconditionFailed(f"need q >= 4hk, got q={q}, hk={h * k}")

    def even_expansion(num: int, den: int) -> ContinuedFraction:
        if den == 1:
            return expand(0, 1)
        cf = expand(num % den, den)
        return adjust_parity(cf, want_even=True)

    left = even_expansion(-h * pow(q, -1, k) if k > 1 else 0, k)
    right = even_expansion(-k * pow(q, -1, h) if h > 1 else 0, h)
    full = expand((h * pow(k, -1, q)) % q, q)
    n_left, n_right = left.kappa, right.kappa
    target_len = n_left + n_right + 1
    if full.kappa != target_len:
        full = adjust_parity(full, want_even=(target_len % 2 == 0))
    if full.kappa != target_len:
        raise ArithmeticError(f"length mismatch for (h,k,q)=({h},{k},{q})")
    middle = full.quotients[n_left + 1]
    return left, middle, right


def check_two_twist_structure(h: int, k: int, q: int) -> bool:
    left, middle, right = two_twist_cf_structure(h, k, q)
    quotients = list(left.quotients) + [middle] + list(reversed(right.quotients[1:]))
    assembled = ContinuedFraction.from_quotients(quotients)
    target = Fraction((h * pow(k, -1, q)) % q, q)
    return assembled.value() == target and abs(middle - Fraction(q, h * k)) < 2


def moment_via_cf(sign, h: int, k: int, q: int) -> float:
    sg = 1 if sign in (1, "+") or (isinstance(sign, int) and sign > 0) else -1
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    two_twist_cf_structure(h, k, q)  # validates the preconditions
    r = q / (h * k)
    return 0.5 * math.sqrt(r) * (math.log(r) + sf.EULER_GAMMA - sf.LOG_8PI - sg * math.pi / 2)


def three_term_residual(sign, h: int, k: int, q: int) -> float:
    """M(h,k;q) -+ M(h,q;k) -+ M(k,q;h) minus its main term, for parity +-."""
    sg = 1 if sign in (1, "+") or (isinstance(sign, int) and sign > 0) else -1
    total = moment_two_twists(sg, h, k, q)
    if k > 2:
        total -= sg * moment_two_twists(sg, h, q, k)
    if h > 2:
        total -= sg * moment_two_twists(sg, k, q, h)
    return total - moment_via_cf(sg, h, k, q)
