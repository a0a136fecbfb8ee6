class SemigroupError(ValueError):
    """Bad input: malformed files, invalid tables, unmet preconditions."""


class ParseError(SemigroupError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AssociativityError(SemigroupError):
    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        if message is None:
            i, j, m = self.triple
            message = f"table is not associative: ({i}*{j})*{m} != {i}*({j}*{m})"
        super().__init__(message)


class ClosureTooLarge(SemigroupError):
    pass


class NotLocallyTestable(SemigroupError):
    """Raised by the level computation; carries the refusing verdict."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"semigroup is not locally testable: {verdict.witness}")


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
