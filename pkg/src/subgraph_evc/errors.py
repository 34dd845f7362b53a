"""Exception and warning types raised by subgraph_evc."""


class SubgraphEVCError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(SubgraphEVCError, ValueError):
    """Malformed graph or pattern input.

    ``lineno`` is the 1-based line of the offending input, or None when the
    problem is not tied to a single line.
    """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class PatternError(SubgraphEVCError, ValueError):
    """Invalid pattern template (unknown token, disconnected, k < 2, ...)."""


class PatternTooLargeError(SubgraphEVCError, ValueError):
    """Pattern order exceeds the configured enumeration limit."""


class ZeroTensorError(SubgraphEVCError, ValueError):
    """The tensor has no nonzero entries; its spectral radius is 0."""


class NotConvergedError(SubgraphEVCError, RuntimeError):
    """The bracket gap stayed above tolerance after ``max_iterations``.

    The last iterate is attached as ``result`` (a SpectralResult with
    ``converged=False``).
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class CentralityUndefinedError(SubgraphEVCError):
    """The requested centrality does not exist for this graph."""


class DisconnectedGraphError(CentralityUndefinedError):
    pass


class NoOccurrencesError(CentralityUndefinedError):
    pass


class NotFConnectedError(CentralityUndefinedError):
    """The subgraph tensor is reducible; ``witness`` is an FConnectivity."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonIrreducibleWarning(UserWarning):
    """An iterate component collapsed toward zero (reducible input suspected)."""
