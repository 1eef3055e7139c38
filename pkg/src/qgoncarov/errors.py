class QGoncarovError(Exception):
    """Base class for errors raised by the library."""


class PoleError(QGoncarovError, ZeroDivisionError):
    """A denominator vanishes at the requested specialization point."""


class GridTooShortError(QGoncarovError, IndexError):
    """A grid node beyond the available prefix was requested."""

    def __init__(self, index, length):
        self.index = index
        self.length = length
        super().__init__(f"grid node z_{index} requested but grid has only {length} nodes")


class BasisError(QGoncarovError, ValueError):
    """A polynomial sequence violates the basic-sequence axioms or a degree contract."""


class InconsistencyError(QGoncarovError, ArithmeticError):
    """An exact computation that must succeed did not (signals a bug)."""


class ParseError(QGoncarovError, ValueError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")
