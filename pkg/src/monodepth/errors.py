"""Exception hierarchy shared by the whole package."""


class MonodepthError(Exception):
    pass


class RingMismatchError(MonodepthError, ValueError):
    """Two objects live in rings of different arity (or different rings)."""


class DegenerateIdealError(MonodepthError, ValueError):
    """Depth and Betti operations are undefined for the zero and unit ideal."""


class LatticeCapExceeded(MonodepthError, RuntimeError):
    def __init__(self, cap: int, reached: int):
        super().__init__(f"lcm lattice exceeded cap of {cap} elements (reached {reached})")
        self.cap = cap
        self.reached = reached


class OracleCapExceeded(MonodepthError, RuntimeError):
    pass


class InvalidSpecError(MonodepthError, ValueError):
    """A candidate depth function violates the construction hypotheses.

    ``condition`` names the violated hypothesis and ``position`` is the
    1-based argument k at which it fails (None for global conditions).
    """

    def __init__(self, condition: str, position: int | None, message: str):
        super().__init__(message)
        self.condition = condition
        self.position = position


class InadmissibleRequest(MonodepthError, ValueError):
    pass


class DocumentError(MonodepthError, ValueError):
    """Malformed ideal/spec/depth-function document."""


class CertificateError(MonodepthError, AssertionError):
    """A combinatorial certificate failed to verify."""
