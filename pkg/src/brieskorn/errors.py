"""Exception hierarchy shared by every module.

Each class carries an ``exit_code`` so the command line front end can map a
failure to its documented status without string matching.
"""


class BrieskornError(Exception):
    exit_code = 1


class InvalidInput(BrieskornError, ValueError):
    exit_code = 2


class InvalidTriple(BrieskornError, ValueError):
    """Base class for triples that fail validation."""

    exit_code = 3


class NonIntegralR(InvalidTriple):
    pass


class NotCoprime(InvalidTriple):
    pass


class OutOfRange(InvalidTriple):
    pass


class NotAlmostSimple(InvalidTriple):
    """The triple is a valid Seifert triple but pq + pr - qr != 1."""


class EvenP(InvalidTriple):
    """Raised by odd-p machinery when handed an even p."""


class OddP(InvalidTriple):
    pass


class DomainError(BrieskornError, ValueError):
    """Lattice point or family parameter outside its allowed domain."""

    exit_code = 2


class ParityError(BrieskornError, ValueError):
    exit_code = 3


class IntegrityError(BrieskornError, ArithmeticError):
    """A value the theory guarantees (evenness, divisibility) did not hold."""

    exit_code = 4


class BudgetExceeded(BrieskornError):
    exit_code = 4
