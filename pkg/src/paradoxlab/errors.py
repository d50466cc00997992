"""Exception taxonomy shared by the whole package.

The command line maps these onto exit codes: usage and parameter problems
exit 1, inadmissible input or failed structural preconditions exit 2, and
iteration-budget exhaustion exits 3.
"""


class ParadoxLabError(Exception):
    """Base class for every error raised by this package."""


class UsageError(ParadoxLabError):
    """An operation was invoked on the wrong kind of object or with an
    invalid combination of options."""


class ParameterError(ParadoxLabError):
    """A numeric or model parameter lies outside its admissible range."""


class InputError(ParadoxLabError):
    """Malformed or inadmissible input data: bad edge pairs, parse
    failures, dimension mismatches."""


class PreconditionError(ParadoxLabError):
    """A structural precondition (connectivity, positive degrees) does
    not hold for the given graph."""


class RangeError(ParadoxLabError):
    """A size or exact-arithmetic overflow guard was exceeded."""


class GenerationError(ParadoxLabError):
    """A random-graph model failed to produce an admissible graph within
    its retry budget."""


class NumericalError(ParadoxLabError):
    """A dense linear-algebra routine failed (e.g. singular system)."""


class ConvergenceError(ParadoxLabError):
    """An iterative solver exhausted ``max_iters`` before reaching its
    tolerance.  Carries the last residual and the iteration count."""

    def __init__(self, message: str, residual: float | None = None,
                 iterations: int | None = None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
