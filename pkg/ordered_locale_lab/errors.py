"""Exception hierarchy for the workbench.

Every error raised on purpose derives from OrderedLocaleError so the CLI can map
it onto the input-error exit code. Most also derive from ValueError because they
reject a malformed argument.
"""


class OrderedLocaleError(Exception):
    """Base class for all workbench errors."""


class SpaceDefinitionError(OrderedLocaleError, ValueError):
    """A space, grid or region definition references unknown or duplicate labels."""


class CapacityError(OrderedLocaleError, ValueError):
    """A point-count or enumeration cap was exceeded."""


class MonadLawError(OrderedLocaleError, ValueError):
    """A cone map handed to from_monad_pair is not a monad.

    Attributes:
        law: Name of the failing law ("extensive", "monotone", "idempotent", "open")
        open_mask: The open (or first open of the failing pair) as a bitmask
    """

    def __init__(self, law: str, open_mask: int, message: str):
        super().__init__(message)
        self.law = law
        self.open_mask = open_mask


class PathError(OrderedLocaleError, ValueError):
    """A step sequence is not a path.

    Attributes:
        index: First offending step index (None when the sequence is empty)
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class RestrictionError(PathError):
    """Restriction produced an empty step; the locale is not parallel ordered."""


class SieveError(OrderedLocaleError, ValueError):
    """A sieve is not down-closed or was used against the wrong root."""


class BudgetExceededError(OrderedLocaleError):
    """An enumeration budget ran out.

    Public verdict functions convert this into an Unknown outcome.
    """

    def __init__(self, bound: str, limit: int):
        super().__init__(f"{bound} budget of {limit} exceeded")
        self.bound = bound
        self.limit = limit
