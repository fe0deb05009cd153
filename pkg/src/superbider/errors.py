"""Exception classes.

Input problems (bad dimensions, malformed files, invalid algebras) are kept
apart from precondition failures and from theorem violations. A
:class:`TheoremViolation` means a computation contradicted a statement that
should hold for every valid input, and callers must never swallow it.
"""


class SuperbiderError(Exception):
    pass


class InputError(SuperbiderError, ValueError):
    pass


class FormatError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(InputError):
    """An algebra failed its structural axioms; ``violations`` holds the report."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        msg = f"{len(self.violations)} axiom violation(s)"
        if first is not None:
            msg += f"; first: {first}"
        super().__init__(msg)


class PreconditionError(SuperbiderError):
    def __init__(self, message: str, flag: str | None = None):
        self.flag = flag
        super().__init__(message)


class TheoremViolation(SuperbiderError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)
