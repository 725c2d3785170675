"""Exception hierarchy.

Every domain failure raised by the kernel derives from :class:`ELError`, so
front ends can map the whole family to one exit status.
"""


class ELError(Exception):
    """Base class for domain errors (bad input for an otherwise valid call)."""


class NonPositive(ELError):
    pass


class LogOutsideDomain(ELError):
    pass


class ExpOutsideDomain(ELError):
    pass


class NotPurelyInfinite(ELError):
    pass


class NotInfinitesimal(ELError):
    pass


class NotInfinite(ELError):
    pass


class ZeroSeries(ELError):
    pass


class DivisionByZero(ELError, ZeroDivisionError):
    pass


class IncomparableUnderTruncation(ELError):
    """The known terms do not decide the question; retry with a larger order."""


class NoLevelWitness(ELError):
    pass


class PreconditionError(ELError, ValueError):
    pass


class ExprSyntaxError(ELError):
    """Parse failure.

    ``offset`` is a byte offset into the UTF-8 encoding of the input and
    ``expected`` the set of token descriptions that would have been accepted.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += " (expected one of: %s)" % ", ".join(sorted(self.expected))
        super().__init__("at offset %d: %s" % (offset, detail))
