"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or unsupported user input (CLI exit code 2)."""


class BraidParseError(InputError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at token {position})"
        super().__init__(message)


class NotAKnotError(InputError):
    """The braid closure has more than one component."""

    def __init__(self, cycles):
        self.cycles = [tuple(c) for c in cycles]
        text = " ".join("(" + " ".join(str(i) for i in c) + ")" for c in self.cycles)
        super().__init__(f"braid closure is a {len(self.cycles)}-component link, cycles: {text}")


class ConsistencyError(ArithmeticError):
    """An internal invariant of a math module failed (CLI exit code 3)."""
