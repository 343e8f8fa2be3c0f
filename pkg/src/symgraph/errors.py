"""Exception and warning types shared across the package."""


class SymgraphError(Exception):
    """Base class for all errors raised by symgraph."""


# graph construction and I/O


class GraphError(SymgraphError, ValueError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class VertexOutOfRangeError(GraphError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range for n={n}")
        self.vertex = u
        self.n = n


class BadFamilyParamsError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class BadCharError(Graph6Error):
    def __init__(self, byte, position):
        super().__init__(f"byte {byte!r} at offset {position} outside [63, 126]")
        self.byte = byte
        self.position = position


class TruncatedPayloadError(Graph6Error):
    pass


class NonzeroPaddingError(Graph6Error):
    pass


class DuplicateEdgeWarning(UserWarning):
    pass


# spectral / calculus preconditions


class NotRegularError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class DegreeZeroError(GraphError):
    pass


class LengthMismatchError(SymgraphError, ValueError):
    def __init__(self, got, expected):
        super().__init__(f"function has length {got}, graph has {expected} vertices")
        self.got = got
        self.expected = expected


class NoConvergenceError(SymgraphError, ArithmeticError):
    def __init__(self, sweeps, off_norm):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


class MatrixTooLargeError(SymgraphError, ValueError):
    pass


class CompleteGraphError(SymgraphError, ValueError):
    """Only two distinct eigenvalues: the second positive eigenvalue is undefined."""


class AmbiguousGroupingWarning(UserWarning):
    pass


# symmetry


class SearchBudgetExceeded(SymgraphError):
    def __init__(self, node_limit):
        super().__init__(f"automorphism search exceeded {node_limit} nodes")
        self.node_limit = node_limit


# certifiers


class CertifierError(SymgraphError, ValueError):
    pass


class KOutOfRangeError(CertifierError):
    pass


class LambdaNotEigenvalueError(CertifierError):
    pass


class SymmetryNotEstablishedError(CertifierError):
    pass


class NotVertexTransitiveError(SymmetryNotEstablishedError):
    pass


class NotArcTransitiveError(SymmetryNotEstablishedError):
    pass


class DenominatorNonpositiveError(CertifierError):
    pass


class NotMonotoneError(CertifierError):
    def __init__(self, which, index):
        super().__init__(f"sequence {which!r} increases at index {index}")
        self.which = which
        self.index = index


class BadNError(CertifierError):
    pass


class ConfigError(SymgraphError):
    pass
