"""Exception types raised throughout :mod:`ncinv`."""


class VariableMismatch(ValueError):
    """Two operands live in polynomial rings with different variable counts."""


class DecompositionError(ValueError):
    """A polynomial or series is not the character of a polynomial GL_d-module."""


class DualCheckError(RuntimeError):
    """The filtering and substitution routes produced different invariant series."""

    def __init__(self, group, degree, filtered, substituted):
        self.group = group
        self.degree = degree
        self.filtered = filtered
        self.substituted = substituted
        super().__init__(
            f"{group}: routes disagree at z^{degree}: "
            f"filter={filtered} substitute={substituted}"
        )


class FormSyntaxError(ValueError):
    """Malformed rational-form expression; ``pos`` is the offending offset."""

    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        pointer = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {pointer}")


class ConfigError(ValueError):
    """Invalid job configuration."""
