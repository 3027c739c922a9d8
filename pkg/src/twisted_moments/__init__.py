"""Twisted second moments of Dirichlet L-functions and their reciprocity.

The public surface is split by module:

* :mod:`.specfun` gamma, zeta, Hurwitz and periodic zeta functions
* :mod:`.characters` characters modulo a prime
* :mod:`.moments` twisted moments M(a,q), M*(s,z;a,q) and relatives
* :mod:`.estermann` the Estermann function and reciprocity residuals
* :mod:`.contour` vertical-line integrals
* :mod:`.reciprocity` exact and truncated reciprocity series
* :mod:`.cfrac` continued fractions and Euclid-chain formulas
* :mod:`.arithsums` Dedekind, cotangent and Vasyunin sums
* :mod:`.verify` / :mod:`.cli` verification suites and the command line
"""
from .arithsums import cotangent_sum, dedekind_sum, vasyunin_sum
from .cfrac import ContinuedFraction, expand, rhs_Ypo
from .errors import (
    DivergentSeries,
    DomainError,
    NearPole,
    NonConvergent,
    NotCoprime,
    NotPrime,
    NumericalOverflow,
    PoleAt,
    PreconditionFailed,
    TwistedMomentsError,
)
from .estermann import estermann_D, eta_value, psi_N
from .moments import moment_M, moment_Mstar
from .reciprocity import mt_series_rhs, mtc_truncated, psi_tilde, young_error
from .specfun import gamma, hurwitz_zeta, riemann_zeta

__version__ = "0.1.0"

__all__ = [
    "ContinuedFraction",
    "DivergentSeries",
    "DomainError",
    "NearPole",
    "NonConvergent",
    "NotCoprime",
    "NotPrime",
    "NumericalOverflow",
    "PoleAt",
    "PreconditionFailed",
    "TwistedMomentsError",
    "cotangent_sum",
    "dedekind_sum",
    "estermann_D",
    "eta_value",
    "expand",
    "gamma",
    "hurwitz_zeta",
    "moment_M",
    "moment_Mstar",
    "mt_series_rhs",
    "mtc_truncated",
    "psi_N",
    "psi_tilde",
    "rhs_Ypo",
    "riemann_zeta",
    "vasyunin_sum",
    "young_error",
]
