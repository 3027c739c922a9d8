import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from twisted_moments import estermann as es
from twisted_moments import moments
from twisted_moments import reciprocity as rc
from twisted_moments import specfun as sf
from twisted_moments.characters import primes_upto
from twisted_moments.errors import DomainError, NonConvergent

Z2 = sf.riemann_zeta(0.5).real ** 2
PRIMES = primes_upto(229)


def young_oracle(a, q):
    m_aq = oracles.moment_M(a, q)
    m_qa = oracles.moment_M((-q) % a, a) if a > 2 else 0.0
    main = math.sqrt(q / a) * (math.log(q / a) + sf.EULER_GAMMA - math.log(8 * math.pi))
    corr = Z2 * (1 - 2 * math.sqrt(q) / (q - 1) * (1 - q**-0.5) + 2 * math.sqrt(a) / (a - 1) * (1 - a**-0.5))
    return m_aq - m_qa - main - corr


@pytest.mark.parametrize("a, q", [(2, 3), (2, 13), (3, 11), (5, 13)])
def test_young_error_against_oracle(a, q):
    assert abs(rc.young_error(a, q) - young_oracle(a, q)) <= 1e-11


def test_young_error_small_ratio():
    assert abs(rc.young_error(2, 229)) <= 10 * 2 / 229


def test_young_error_domain():
    with pytest.raises(DomainError):
        rc.young_error(7, 5)
    with pytest.raises(DomainError):
        rc.young_error(4, 7)


def test_young_error_is_psi_tilde_zero():
    for a, q in ((2, 229), (7, 101), (31, 53)):
        assert abs(rc.young_error(a, q) - rc.psi_tilde(a, q, 1, 0)) <= 1e-11


@pytest.mark.parametrize("a, q, sign", [(2, 7, 1), (3, 11, -1), (2, 229, 1), (2, 229, -1), (5, 17, -1)])
def test_mt_series(a, q, sign):
    res = rc.mt_series_rhs(a, q, sign)
    ref = moments.moment_Mstar(0.5, 0, sign * a, q).real
    assert abs(res.value - ref) <= 1e-6
    assert res.tail_estimate <= 1e-6


def test_mt_series_rejects_large_ratio():
    with pytest.raises(NonConvergent):
        rc.mt_series_rhs(7, 5, 1)


def test_mt_head_terms_shrink():
    # terms decay like 1/j^2 once j exceeds q/a
    terms = [abs(rc.mt_term(j, 2, 7, 1)) for j in (5, 10, 19)]
    assert terms[0] > terms[1] > terms[2]


@pytest.mark.parametrize("a, q, sign, N", [(2, 7, 1, 0), (3, 11, -1, 0), (5, 229, -1, 1), (2, 13, 1, 1)])
def test_mtc_psi_matches_estermann_side(a, q, sign, N):
    main, psi = rc.mtc_truncated(a, q, sign, N)
    ref = moments.moment_Mstar(0.5, 0, sign * a, q).real
    assert abs(main + psi - ref) <= 1e-12
    assert abs(psi - es.psi_N(N, a, q, sign)) <= 1e-7


def test_mtc_bound_first_order():
    _, psi = rc.mtc_truncated(5, 229, -1, 1)
    assert abs(psi) <= 10 * (5 / 229) ** 3


def test_psi_tilde_zero_is_psi_zero():
    for a, q, sg in ((2, 7, 1), (3, 11, -1)):
        assert abs(rc.psi_tilde(a, q, sg, 0) - rc.mtc_truncated(a, q, sg, 0)[1]) <= 1e-13


def test_psi_tilde_bound():
    assert abs(rc.psi_tilde(2, 101, 1, 2)) <= 10 * (2 / 101) ** 3


def test_psi_tilde_retruncation():
    # psi_tilde_N adds back the reciprocal terms N+1..2N to psi_N
    a, q, sg, N = 3, 17, 1, 2
    _, psi = rc.mtc_truncated(a, q, sg, N)
    y = -sg * a / q
    extra = sum(
        sf.binom_half(j) * y**j * (rc._mstar_j(j, -sg * q, a) + sf.zeta_pair_half(j)) for j in range(N + 1, 2 * N + 1)
    )
    assert abs(rc.psi_tilde(a, q, sg, N) - (psi + extra)) <= 1e-10


def test_psi_tilde_grid_matches_scalar():
    grid = rc.psi_tilde_grid(31, 1, 1, [2, 3, 5])
    for a, v in zip((2, 3, 5), grid):
        assert v == rc.psi_tilde(a, 31, 1, 1)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(PRIMES), st.sampled_from(PRIMES), st.sampled_from([1, -1]))
def test_mtc_two_paths_property(a, q, sign):
    if a >= q:
        a, q = q, a
    if a == q:
        return
    _, psi = rc.mtc_truncated(a, q, sign, 0)
    assert abs(psi - es.psi_N(0, a, q, sign)) <= 1e-7


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([p for p in PRIMES if p < 60]), st.sampled_from([p for p in PRIMES if p > 60]))
def test_small_ratio_law_property(a, q):
    assert abs(rc.psi_tilde(a, q, 1, 0)) * q / a <= 10
