"""Domain errors raised by the parametrisation and group-map operations."""


class SpinParamError(Exception):
    """Base class for parametrisation failures.

    The class name doubles as the machine-readable error code in the CLI's
    structured output mode.
    """

    @property
    def code(self) -> str:
        return type(self).__name__


class NotSpinElement(SpinParamError):
    """Value is not an even element with reverse(S) * S = e within tolerance."""


class LambdaNotPositive(SpinParamError):
    """lambda(B) is not strictly positive: no regular form passes through B."""


class NotSimpleBivector(SpinParamError):
    """Bivector has a nonzero wedge square, so it is not of the form u ^ v."""


class RhoNegative(SpinParamError):
    """rho = epsilon * (1 + beta) is negative: no trace-free form through B."""


class BetaOutOfRange(SpinParamError):
    """beta = Tr(B * B) is below -1, outside the low-dimension form's domain."""


class ParametrisationInconsistent(SpinParamError):
    """Internal cross-checks failed: either a bug or a non-group input."""
