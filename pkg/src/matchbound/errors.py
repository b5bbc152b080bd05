"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class EmbeddingError(ValueError):
    """A rotation system fails validation (face closure or Euler's relation)."""


class OracleSizeError(RuntimeError):
    """Exhaustive enumeration refused: the graph exceeds the size guard."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"oracle too large: graph has {n} vertices, enumeration guard is {limit} "
            f"(raise max_vertices to override)"
        )
        self.n = n
        self.limit = limit


class ConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a skew determinant that should be a
    perfect square is not); indicates a bug, not bad input."""


class BoundViolationError(RuntimeError):
    """An exact count exceeded a proved upper bound; indicates a bug."""
