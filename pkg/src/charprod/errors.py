"""Exception hierarchy shared across the engine."""


class CharprodError(Exception):
    """Base class for every error raised by this package."""


class EmptyGeneratorSet(CharprodError):
    """No generators were supplied and no degree was given."""


class ClosureCapExceeded(CharprodError):
    """Group enumeration passed the configured element cap."""

    def __init__(self, cap):
        super().__init__(f"group closure exceeded the element cap of {cap}")
        self.cap = cap


class ParseError(CharprodError):
    """Malformed permutation or group text; carries line/column."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class UnknownId(CharprodError):
    """Requested catalog entry does not exist."""


class GroupMismatch(CharprodError):
    """Class functions defined on different groups were combined."""


class IntegralityViolation(CharprodError):
    """An inner product of characters failed to be a rational integer."""


class NotACharacter(CharprodError):
    """Decomposition produced a negative or non-integral multiplicity."""


class NotASubgroup(CharprodError):
    """An element set asserted to be a subgroup failed to close."""


class NotNormal(CharprodError):
    """Operation requires a normal subgroup."""


class NotAPGroup(CharprodError):
    """Operation requires the group order to be a prime power."""


class EigensplitStall(CharprodError):
    """Class matrices failed to split all eigenspaces (engine bug)."""


class LiftInconsistent(CharprodError):
    """Lifted character table failed exact orthogonality (engine bug)."""


class NoCorrespondent(CharprodError):
    """Clifford correspondent missing (violates Clifford theory)."""


class NotUnique(CharprodError):
    """Clifford correspondent not unique (violates Clifford theory)."""


class HypothesisNotMet(CharprodError):
    """A check was invoked outside the hypotheses of its statement."""


class SearchExhausted(CharprodError):
    """Monomial witness descent died on every branch; carries the trail."""

    def __init__(self, message, trail=None):
        super().__init__(message)
        self.trail = trail or []
