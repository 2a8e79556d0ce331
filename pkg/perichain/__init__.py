"""
    Author: perichain contributors
    Date: 2026.10

    perichain: exact computations with the periodic module of the affine Hecke algebra of GL_d, the tensor modules of
    the quantum loop algebra of gl_p, their canonical bases and the Schur-duality bridge between them.
"""

__version__ = "0.1"


class PerichainError(Exception):
    """
    Base class of all errors raised by this toolkit.
    Caller contract violations are reported by assert statements instead.
    """


class ConventionError(PerichainError):
    """
    A hard failure: some computed object violates a structural property that the algorithms rely on,
    e.g. a non-integral elimination coefficient or a decomposition that does not exist.
    """


class WindowError(PerichainError):
    """
    The computation could not cover the requested window within its search budget.
    The uncovered items are attached for reporting.
    """

    def __init__(self, message: str, uncovered=None):
        super(WindowError, self).__init__(message)
        self.uncovered = [] if uncovered is None else list(uncovered)


class SpanError(PerichainError):
    """
    A vector is not in the span of the bar-fixed family it should be expressed in.
    """
