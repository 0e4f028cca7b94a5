"""Exception hierarchy for the signrank toolkit.

Protocol outcomes (refinement requests, inconclusive verdicts, searches that
did not improve) are returned as values; only genuine failures raise.
"""


class SignRankError(Exception):
    """Base class for every error raised by signrank."""


class ContextMismatch(SignRankError):
    """Arithmetic or assembly across two different field contexts."""


class PolynomialSignUndefined(SignRankError):
    """Sign requested for a polynomial without an evaluation point."""


class ZeroPolynomial(SignRankError):
    """Operation needs a nonzero polynomial."""


class EndpointIsRoot(SignRankError):
    """An interval endpoint is a root of the polynomial under study."""

    def __init__(self, endpoint: object) -> None:
        super().__init__(f"interval endpoint {endpoint} is a root")
        self.endpoint = endpoint


class UnresolvedFactor(SignRankError):
    """A factor of degree >= 3 remains; the root set would be incomplete."""

    def __init__(self, degree: int) -> None:
        super().__init__(f"unresolved factor of degree {degree}")
        self.degree = degree


class DimensionMismatch(SignRankError):
    """Matrix shapes do not fit together."""


class MinorOrderOutOfRange(SignRankError):
    """Minor order k outside 1..min(rows, cols)."""


class InvalidStructure(SignRankError):
    """Incidence structure violates its invariants."""


class ShapeError(SignRankError):
    """Sign pattern is not of the required block shape."""


class NoValidFrame(SignRankError):
    """No projective frame exists among the structure's points."""


class TraceMismatch(SignRankError):
    """Certificate trace does not reproduce its recorded constraints."""


class NoAvoidingLineFound(SignRankError):
    """No small rational line misses every point of the realization."""


class ZeroDenominator(SignRankError):
    """A rational-function entry has a zero denominator."""


class SerializationError(SignRankError):
    """Malformed JSON document."""
