"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class DomainError(ValueError):
    """Invalid input: modulus mismatch, out-of-range parameter, bad syntax."""


class ParseError(DomainError):
    """Malformed text form of a set, element or chord.

    ``position`` is the 0-based character offset of the offending token
    (or ``None`` when the whole string is at fault).
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} (at position {position}: {text!r})"
        super().__init__(message)


class SizeLimitError(DomainError):
    """Exhaustive search requested on an input that is too large."""


class ContractViolation(AssertionError):
    """A result that a theorem guarantees was not produced.

    Raised instead of returning a wrong answer; seeing this means either a bug
    or a counterexample to the underlying mathematics.
    """
