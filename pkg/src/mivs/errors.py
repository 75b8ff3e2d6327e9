"""Exception hierarchy shared by all mivs modules."""


class MivsError(Exception):
    """Base class for every error raised by this package."""


# --- instance validation ---------------------------------------------------

class EmptyInstance(MivsError):
    """Instance has zero items or zero vendors."""


class DimensionMismatch(MivsError):
    """Price matrix / fixed-cost vector dimensions are inconsistent."""


class DuplicateId(MivsError):
    """Two items or two vendors share the same id."""


class NonPositivePrice(MivsError):
    """A present bid price is zero or negative."""


class NegativeFixedCost(MivsError):
    """A vendor fixed cost is negative."""


# --- parsing / generation --------------------------------------------------

class BadNumber(MivsError):
    """Money text is negative, non-numeric, or has more than 2 decimals."""


class MalformedCsv(MivsError):
    """Bid CSV is structurally broken (ragged rows, bad header, missing
    fixed-cost row, duplicate column names)."""


class BadParameters(MivsError):
    """Instance-generation parameters are out of range."""


# --- subset codec ----------------------------------------------------------

class OutOfRange(MivsError):
    """Solution id outside [1, 2^n - 1]."""


class UnsupportedWidth(MivsError):
    """Vendor count exceeds the 62-bit id width this codec guarantees."""


class EmptySubset(MivsError):
    """A vendor subset must contain at least one vendor."""


class IndexOutOfRange(MivsError):
    """A vendor index falls outside 1..n."""


# --- constraints and solving -----------------------------------------------

class BadConstraint(MivsError):
    """A constraint references an unknown vendor or an impossible bound."""


class ConflictingConstraints(MivsError):
    """Required and forbidden vendor sets intersect."""


class InfeasibleSubset(MivsError):
    """Subset leaves items uncovered under full-coverage mode."""

    def __init__(self, message: str, uncovered: tuple = ()):  # noqa: D401
        super().__init__(message)
        self.uncovered = tuple(uncovered)


class NoFeasibleSubset(MivsError):
    """No vendor subset satisfies the constraints (and coverage mode)."""


class TooManyVendors(MivsError):
    """Vendor count exceeds the exhaustive-solver cap."""


class SolveTimeout(MivsError):
    """The solve exceeded its configured time budget."""


# --- baseline policies -----------------------------------------------------

class NoFullCoverageVendor(MivsError):
    """No single vendor bids on every item."""


class UncoveredItem(MivsError):
    """An item has no bid from any vendor."""

    def __init__(self, message: str, items: tuple = ()):  # noqa: D401
        super().__init__(message)
        self.items = tuple(items)


# --- what-if ---------------------------------------------------------------

class InstanceMismatch(MivsError):
    """Two solutions being compared come from different instances."""
