import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from twisted_moments import cfrac as cf
from twisted_moments import estermann as es
from twisted_moments import moments
from twisted_moments import specfun as sf
from twisted_moments.characters import primes_upto
from twisted_moments.errors import NotCoprime, PreconditionFailed

Z2 = sf.riemann_zeta(0.5).real ** 2


def reconstruct(quotients):
    val = Fraction(quotients[-1])
    for b in reversed(quotients[:-1]):
        val = b + 1 / val
    return val


def test_expand_examples():
    e = cf.expand(7, 17)
    assert e.quotients == (0, 2, 2, 3)
    assert e.conv_den == (1, 2, 5, 17)
    assert e.kappa == 3
    assert cf.expand(1, 5).quotients == (0, 5)
    assert cf.expand(0, 1).quotients == (0,)
    assert cf.expand(0, 1).kappa == 0
    with pytest.raises(NotCoprime):
        cf.expand(4, 6)


def test_adjust_parity_examples():
    e = cf.expand(7, 17)
    even = cf.adjust_parity(e, want_even=True)
    assert even.quotients == (0, 2, 2, 2, 1)
    assert even.value() == Fraction(7, 17)
    assert cf.adjust_parity(cf.expand(1, 5), want_even=False).quotients == (0, 5)
    assert cf.canonical(even) == e


def test_reversal_examples():
    assert cf.reversal_identity_check(7, 17)
    assert cf.reversal_identity_check(1, 5)
    assert cf.reversal_identity_check(0, 1)


def test_exact_D_formula_examples():
    assert abs(cf.exact_D_formula(0, 1, 1) - Z2) <= 1e-12
    for a, q in ((7, 17), (1, 11), (5, 12), (13, 40)):
        for sg in (1, -1):
            ref = es.estermann_D(0.5, 0, sg * a, q)
            assert abs(cf.exact_D_formula(a, q, sg) - ref) <= 1e-7


def test_exact_D_formula_against_hurwitz_oracle():
    assert abs(cf.exact_D_formula(7, 17, 1) - oracles.estermann_D(0.5, 0, 7, 17)) <= 1e-7


@pytest.mark.parametrize("a, q, sign", [(2, 7, 1), (1, 3, 1), (5, 229, -1), (3, 11, -1), (10, 13, 1)])
def test_rhs_ypo_examples(a, q, sign):
    ref = moments.moment_Mstar(0.5, 0, sign * a, q).real
    assert abs(cf.rhs_Ypo(a, q, sign) - ref) <= 1e-6


def test_rhs_ypo_alternate_expansion():
    for a, q in ((7, 17), (2, 11), (5, 101)):
        alt = cf.adjust_parity(cf.expand(a, q), want_even=cf.expand(a, q).kappa % 2 == 1)
        assert alt.kappa != cf.expand(a, q).kappa
        for sg in (1, -1):
            assert abs(cf.rhs_Ypo(a, q, sg, expansion=alt) - cf.rhs_Ypo(a, q, sg)) <= 1e-7


@pytest.mark.parametrize("q", [p for p in primes_upto(60) if p > 2])
def test_rhs_ypo_all_residues(q):
    grid = moments.mstar_grid(0.5, 0, q)
    for a in range(1, q):
        for sg in (1, -1):
            assert abs(cf.rhs_Ypo(a, q, sg) - grid[(sg * a) % q].real) <= 1e-6


def test_f_pm_examples():
    one = math.sqrt(2) * (math.log(2) + sf.EULER_GAMMA - math.log(8 * math.pi) - math.pi / 2)
    assert abs(cf.f_pm(1, 1, 2) - one) <= 1e-14
    expected = 0.0
    for j, b in enumerate((2, 2, 3), start=1):
        expected += (-1) ** j * math.sqrt(b) * (math.log(b) + sf.EULER_GAMMA - math.log(8 * math.pi) + math.pi / 2)
    assert abs(cf.f_pm(-1, 7, 17) - expected) <= 1e-14


def test_two_twist_examples():
    left, middle, right = cf.two_twist_cf_structure(1, 2, 11)
    assert left.quotients == (0, 1, 1)
    assert middle == 5
    assert right.kappa == 0
    left, middle, right = cf.two_twist_cf_structure(1, 1, 13)
    assert left.kappa == 0 and right.kappa == 0 and middle == 13
    assert cf.check_two_twist_structure(2, 3, 29)
    with pytest.raises(PreconditionFailed):
        cf.two_twist_cf_structure(2, 3, 23)


def test_two_twist_exact_lists():
    h, k, q = 2, 3, 29
    left, middle, right = cf.two_twist_cf_structure(h, k, q)
    assert left.value() == Fraction((-h * pow(q, -1, k)) % k, k)
    assert right.value() == Fraction((-k * pow(q, -1, h)) % h, h)
    assert left.kappa % 2 == 0 and right.kappa % 2 == 0
    full = list(left.quotients) + [middle] + list(reversed(right.quotients[1:]))
    assert reconstruct(full) == Fraction((h * pow(k, -1, q)) % q, q)


def test_moment_via_cf_residuals():
    for sg, h, k, q in ((1, 1, 1, 101), (-1, 1, 2, 113)):
        resid = moments.moment_two_twists(sg, h, k, q) - cf.moment_via_cf(sg, h, k, q)
        assert abs(resid) <= 10 * math.sqrt(h + k) * math.log(q)
    for h, k, q in ((3, 5, 61), (2, 3, 29)):
        for sg in (1, -1):
            assert abs(cf.three_term_residual(sg, h, k, q)) <= 10 * math.log(q)


# ---------------------------------------------------------------- properties


coprime_pairs = st.tuples(st.integers(0, 10**6), st.integers(1, 10**6)).filter(lambda t: math.gcd(*t) == 1)


@settings(max_examples=300, deadline=None)
@given(coprime_pairs)
def test_expansion_structure_property(pair):
    a, q = pair
    e = cf.expand(a, q)
    assert reconstruct(list(e.quotients)) == Fraction(a, q)
    assert e.conv_den[-1] == q // math.gcd(a, q)
    assert oracles.euclid(a, q) == list(e.quotients)
    if e.kappa >= 1:
        assert e.quotients[-1] >= 2
    for j in range(1, e.kappa + 1):
        det = e.conv_num[j] * e.conv_den[j - 1] - e.conv_num[j - 1] * e.conv_den[j]
        assert det == (-1) ** (j - 1)


@settings(max_examples=200, deadline=None)
@given(coprime_pairs.filter(lambda t: 0 < t[0] < t[1]), st.booleans())
def test_adjust_parity_property(pair, want_even):
    a, q = pair
    e = cf.adjust_parity(cf.expand(a, q), want_even)
    assert e.value() == Fraction(a, q)
    assert (e.kappa % 2 == 0) == want_even
    assert cf.adjust_parity(e, want_even) == e


@settings(max_examples=200, deadline=None)
@given(coprime_pairs.filter(lambda t: 0 < t[0] < t[1]))
def test_reversal_property(pair):
    a, q = pair
    assert cf.reversal_identity_check(a, q)
    e = cf.expand(a, q)
    rev = cf.ContinuedFraction.from_quotients([0] + list(reversed(e.quotients[1:])))
    # continuants are symmetric, so the reversed chain ends at the same denominator
    assert rev.conv_den[-1] == q
    assert rev.conv_num[-1] == e.conv_den[-2]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.sampled_from(primes_upto(500)))
def test_two_twist_structure_property(h, k, q):
    if math.gcd(h, k) != 1 or q % h == 0 or q % k == 0 or q < 4 * h * k:
        return
    assert cf.check_two_twist_structure(h, k, q)
