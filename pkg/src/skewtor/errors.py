"""Exceptions shared across the workbench."""


class SkewtorError(Exception):
    pass


class DimensionMismatch(SkewtorError):
    """Operands live over coframes of different dimension."""


class DegreeError(SkewtorError):
    """An operation received a form of the wrong degree."""


class StructureError(SkewtorError):
    """A geometric structure violates its defining compatibility conditions."""


class NoSkewConnection(SkewtorError):
    """No metric connection with totally skew-symmetric torsion preserves the structure.

    `reason` is a stable machine-readable code, e.g. "nijenhuis-not-skew",
    "xi-not-killing", "two-form-component".
    """

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or reason)


class FormParseError(SkewtorError):
    """Blade-expression syntax error; `position` is the 0-based offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")
