"""
Exception types for accel-ent.

Every error raised by the library derives from :class:`AccelEntError`.
Each class carries a fixed headline message; the specifics of a failure
(offending values, matrix diagnostics, hints) are attached as exception
notes so they show up in tracebacks and can be echoed by the CLI.
"""


class AccelEntError(RuntimeError):
    """Base class for all accel-ent errors.

    Parameters
    ----------
    *details : str
        Optional detail strings attached to the exception as notes.
    """

    headline = "accel-ent computation failed."

    def __init__(self, *details: str) -> None:
        super().__init__(self.headline)
        for detail in details:
            if detail:
                self.add_note(detail)

    @property
    def details(self) -> list[str]:
        """Notes attached to this exception, in insertion order."""
        return list(getattr(self, "__notes__", []))


class ParameterDomainError(AccelEntError, ValueError):
    """A parameter lies outside its legal range.

    Examples
    --------
    >>> raise ParameterDomainError("m must be positive, got -1.0")
    ParameterDomainError: parameter outside its legal range.
    """

    headline = "parameter outside its legal range."


class DegenerateStateError(AccelEntError):
    """The requested state has zero norm and cannot be normalized."""

    headline = "state has zero norm."


class MixedStatisticsError(AccelEntError):
    """Fermion and boson factors were combined in one state."""

    headline = "cannot combine fermion and boson factors in one state."


class DimensionLimitError(AccelEntError):
    """A density matrix exceeds the configured dimension guard."""

    headline = "density matrix dimension exceeds the configured limit."


class ConvergenceError(AccelEntError):
    """An iterative method did not reach its tolerance."""

    headline = "numerical method did not converge."


class QuadratureToleranceError(ConvergenceError):
    """Adaptive quadrature reported an error estimate above tolerance."""

    headline = "quadrature error estimate above tolerance."


__all__ = [
    "AccelEntError",
    "ConvergenceError",
    "DegenerateStateError",
    "DimensionLimitError",
    "MixedStatisticsError",
    "ParameterDomainError",
    "QuadratureToleranceError",
]
