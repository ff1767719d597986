"""Exception types shared across the package."""


class IsolationGameError(Exception):
    """Base class for all isogame errors."""


class OrderTooLarge(IsolationGameError):
    """Graph order exceeds the supported limit."""


class BadEdge(IsolationGameError):
    """Edge endpoint out of range, or a self-loop."""


class MalformedGraph6(IsolationGameError):
    """Input is not a valid graph6 record."""


class BadSpec(IsolationGameError):
    """Family specification violates its preconditions."""


class PatternTooLarge(IsolationGameError):
    """Forbidden pattern exceeds the containment-search budget (order 6)."""


class IllegalMove(IsolationGameError):
    """Vertex is not playable in the given state."""


class TerminalState(IsolationGameError):
    """Operation requires a non-terminal state but every vertex is marked."""


class StateSpaceBudgetExceeded(IsolationGameError):
    """Solver transposition table exceeded its configured capacity."""


class BudgetExceeded(IsolationGameError):
    """Instance exceeds a reference-computation budget (order caps)."""
