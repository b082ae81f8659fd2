"""Exception types shared across the package."""


class SturmError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(SturmError, ValueError):
    """Malformed permutation text.

    Carries the 1-based index of the offending token in ``position``
    (``None`` when the problem is not tied to a single token, e.g. empty
    input or an even length).
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (token {position})")
        self.position = position


class NotSturmError(SturmError, ValueError):
    """A permutation required to be Sturm (dissipative, Morse, meander) is not."""


class NotMeanderError(SturmError, ValueError):
    """A permutation required to be a meander permutation is not."""


class WindowError(SturmError, ValueError):
    """A meander window is inconsistent with every Sturm completion."""
