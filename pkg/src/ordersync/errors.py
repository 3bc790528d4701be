"""Shared exception types."""


class InputError(ValueError):
    """Malformed or out-of-contract arguments (undeclared tokens, wrong
    automaton class, relations that fail a required shape)."""


class PartialityError(Exception):
    """An undefined transition was hit where full definedness is required.

    `position` is the 1-based index of the offending letter, `state` the
    active state it was applied to.
    """

    def __init__(self, position, state, letter):
        self.position = position
        self.state = state
        self.letter = letter
        super().__init__(
            f"undefined transition at position {position}: state {state!r} under letter {letter!r}"
        )


class BudgetExceeded(Exception):
    """A bounded search ran out of its configured budget."""


class ParseError(ValueError):
    """Instance-file syntax or token error; carries the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
