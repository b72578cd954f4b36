"""Exception hierarchy shared by every layer of the package."""


class CodegreeError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(CodegreeError):
    pass


class CapExceeded(CodegreeError):
    """A group (or a class count) grew beyond a configured limit."""


class ClassLimitExceeded(CapExceeded):
    pass


class ParseError(CodegreeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RangeError(CodegreeError):
    pass


class FileError(CodegreeError):
    pass


class MissingData(FileError):
    pass


class SplitFailure(CodegreeError):
    """Eigenspace splitting did not reach one-dimensional spaces."""


class NotSubgroup(CodegreeError):
    pass


class NotNormal(CodegreeError):
    pass


class NotSimple(CodegreeError):
    pass


class NonIntegral(CodegreeError):
    """A codegree came out fractional; always a table bug."""
