"""Exception hierarchy shared by the library and the command line front end."""


class BezoutError(Exception):
    """Base class for every error raised by this package."""


class ParseError(BezoutError, ValueError):
    """Malformed polynomial text. ``position`` is the 0-based column of the offending token."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class PreconditionError(BezoutError, ValueError):
    pass


class TheoremViolation(BezoutError, AssertionError):
    """An identity that must hold for every valid input did not.

    Only ever raised when the implementation itself is wrong.
    """
