"""Exception types shared across the package."""


class ContextError(ValueError):
    """Operands belong to polynomial rings with different variable counts."""


class DegreeError(ValueError):
    """Mixed or out-of-range homological degrees."""


class ZeroElementError(ValueError):
    """An operation that needs a nonzero element got the zero element."""


class DuplicateError(ValueError):
    """Duplicate monomial in a generating set."""


class CapacityError(ValueError):
    """Generator count exceeds the soft cap (2^r basis elements)."""


class LabelError(ValueError):
    """Index sequence not strictly ascending, out of range, or unknown."""


class NotGroebnerError(ValueError):
    """A division-based construction required a Groebner basis and got none."""


class NotASubcomplexError(ValueError):
    """Kept labels are not closed under the differential."""


class SdrInvariantError(AssertionError):
    """A strong deformation retract identity failed eager verification."""


class ParseError(ValueError):
    """Malformed ideal input; carries a character position when known."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos
