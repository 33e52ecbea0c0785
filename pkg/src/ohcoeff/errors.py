"""Exception hierarchy.

Every error raised deliberately by the package derives from
:class:`OHError`; the CLI maps the three families below onto exit codes.
"""


class OHError(Exception):
    """Base class for package errors."""


class ValidationError(OHError):
    """Bad input: malformed files, unknown names, violated preconditions."""


class DanglingReference(ValidationError):
    pass


class DuplicateName(ValidationError):
    pass


class InvalidSign(ValidationError):
    pass


class UnknownElement(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IsolatedVertex(ValidationError):
    pass


class NotASignedGraph(ValidationError):
    pass


class NotAPlainGraph(ValidationError):
    pass


class NotSquare(ValidationError):
    pass


class PreconditionViolated(ValidationError):
    pass


class InvalidContributor(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class ResourceLimitExceeded(OHError):
    """A configured cap was hit before the computation finished."""


class VerificationError(OHError):
    """Two independent computations disagreed. Always an implementation bug."""


class InternalNonIntegral(VerificationError):
    pass
