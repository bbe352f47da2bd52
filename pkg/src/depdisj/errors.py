"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
it to a process status without a lookup table.
"""


class ModularizeError(Exception):
    exit_code = 1


class EmptyCaseForm(ModularizeError, ValueError):
    pass


class ScopeMismatch(ModularizeError, ValueError):
    pass


class ScopeOverlap(ModularizeError, ValueError):
    pass


class BadSubscope(ModularizeError, ValueError):
    pass


class NothingToSplit(ModularizeError, ValueError):
    pass


class InvalidToken(ModularizeError, ValueError):
    pass


class ParseError(ModularizeError):
    """Syntax error in a constraint document."""

    exit_code = 1

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DuplicateGroup(ParseError):
    pass


class RaggedGroup(ModularizeError, ValueError):
    exit_code = 2

    def __init__(self, message, group=None, line=None):
        self.group = group
        self.line = line
        super().__init__(message)


class EmptyGroup(ModularizeError, ValueError):
    exit_code = 2

    def __init__(self, message, group=None, line=None):
        self.group = group
        self.line = line
        super().__init__(message)


class GroupTooLarge(ModularizeError):
    exit_code = 3

    def __init__(self, message, group=None, size=None, limit=None):
        self.group = group
        self.size = size
        self.limit = limit
        super().__init__(message)


class VerificationError(ModularizeError):
    exit_code = 4
