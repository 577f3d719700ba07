"""Exception hierarchy shared by every module of the package."""


class NicholsError(Exception):
    """Base class for all errors raised by this package."""


class ConductorMismatchError(NicholsError, ValueError):
    """Two cyclotomic values (or a root order) live in incompatible fields."""


class CyclotomicZeroDivisionError(NicholsError, ZeroDivisionError):
    pass


class DomainError(NicholsError, ValueError):
    """An argument lies outside the domain of the operation."""


class LiteralParseError(NicholsError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class CartanUndefinedError(NicholsError):
    """No n satisfies the Cartan-integer condition for the pair (i, j)."""

    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(f"Cartan entry undefined for vertices ({i}, {j})")


class RootSystemNotFiniteError(NicholsError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"root system not finite at cap ({cap} roots)")


class BudgetExceededError(NicholsError):
    def __init__(self, requested, budget, what="candidate words"):
        self.requested = requested
        self.budget = budget
        super().__init__(f"{requested} {what} exceed the budget of {budget}")


class ConstraintError(NicholsError, ValueError):
    """A row preset parameter violates the constraint of its table row."""


class UnrecognizedDegreePatternError(NicholsError):
    pass


class InconsistencyError(NicholsError):
    """An internal consistency check failed (e.g. duplicate Lie degrees)."""
