"""Error types shared across the package.

The CLI maps these onto process exit codes, so the split matters:
bad arguments (2), blown resource budgets (3), and internal
cross-checks that disagree (4).
"""


class DomainError(ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(ValueError):
    """An input exceeds a hard capacity guard (table size, 64-bit value range)."""


class ResourceError(RuntimeError):
    """A computation would exceed its stated work or memory budget."""


class ConsistencyError(RuntimeError):
    """Two supposedly equivalent computations disagreed. Always a bug."""
