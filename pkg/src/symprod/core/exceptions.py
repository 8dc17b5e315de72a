"""Exception hierarchy for symprod.

All exceptions inherit from SymprodError, allowing callers to catch
the base type for generic error handling or specific subclasses for
targeted recovery. The CLI maps the three families below onto exit
codes: validation errors (2), resource errors (3) and invariant
violations (1).
"""


class SymprodError(Exception):
    """Base exception for all symprod errors."""


class ConfigError(SymprodError):
    """Raised when configuration is invalid or missing."""


# ── Input validation (exit code 2) ──


class ValidationError(SymprodError):
    """Base class for malformed input: bad specs, bad vectors, bad subgroups."""


class SpecParseError(ValidationError):
    """Raised when a group-spec string does not match the grammar."""

    def __init__(self, spec: str, message: str) -> None:
        self.spec = spec
        super().__init__(f"Cannot parse group spec '{spec}': {message}")


class PermutationError(ValidationError):
    """Raised when a generator is not a permutation of {1..degree}."""


class DomainError(ValidationError):
    """Base class for operands outside an operation's domain."""


class SubgroupError(DomainError):
    """Raised when a set is not a subgroup of the stated parent, or pairs are not nested."""


class HomomorphismError(DomainError):
    """Raised when generator images do not extend to a homomorphism."""


class GroupMismatchError(DomainError):
    """Raised when operands live over different groups."""

    def __init__(self, operation: str, expected: object, actual: object) -> None:
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(f"{operation}: expected group {expected}, got {actual}")


class DimensionError(DomainError):
    """Raised when a lattice vector has the wrong length."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch: expected length {expected}, got {actual}")


class LatticeError(DomainError):
    """Raised when a sublattice relation required by an operation does not hold."""


class BisetError(DomainError):
    """Raised when a biset violates commuting actions or right-freeness."""


class SelectorError(ValidationError):
    """Raised when a subgroup selector or element vector cannot be interpreted."""


# ── Resource bounds (exit code 3) ──


class ResourceBoundError(SymprodError):
    """Raised when a computation would exceed a configured size bound.

    Attributes:
        quantity: What was measured (e.g. 'group order').
        value: The measured value.
        bound: The configured bound.
    """

    def __init__(self, quantity: str, value: int, bound: int) -> None:
        self.quantity = quantity
        self.value = value
        self.bound = bound
        super().__init__(f"{quantity} {value} exceeds the configured bound {bound}")


# ── Internal failures (exit code 1) ──


class InvariantViolationError(SymprodError):
    """Raised when an internal invariant fails. Always a bug."""
