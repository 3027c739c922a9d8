"""Exception hierarchy shared by all numerical modules."""


class TwistedMomentsError(Exception):
    pass


class DomainError(TwistedMomentsError, ValueError):
    """An argument lies outside the region where the quantity is defined."""


class PoleAt(TwistedMomentsError, ValueError):
    def __init__(self, point, what: str = ""):
        self.point = point
        msg = f"pole at {point!r}"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class NearPole(PoleAt):
    """Raised when a parameter is closer than the safety margin to a pole."""


class NotPrime(DomainError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"{n} is not prime")


class NotCoprime(DomainError):
    def __init__(self, a: int, q: int):
        self.a, self.q = a, q
        super().__init__(f"gcd({a}, {q}) != 1")


class PreconditionFailed(DomainError):
    pass


class DivergentSeries(DomainError):
    pass


class NonConvergent(DomainError):
    pass


class NumericalOverflow(TwistedMomentsError, OverflowError):
    pass
