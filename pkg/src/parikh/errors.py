"""Exception types shared across the package."""


class GrammarError(ValueError):
    """Raised when a grammar file cannot be parsed or fails validation."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class TreeSyntaxError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class NotAdjoinableError(ValueError):
    """The adjunct's root nonterminal does not occur in the target tree."""


class UnknownLetterError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration produced more objects than its configured cap.

    ``count`` is the number of objects produced before giving up. A truncated
    enumeration would make the computed image unsound, so callers must treat
    this as fatal.
    """

    def __init__(self, what, count, budget):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(f"{what}: budget of {budget} exceeded after {count} items")
