"""Exception hierarchy.

Every error raised deliberately by the library derives from ``HilbkzError`` so
the command line front end can turn it into a machine readable failure.
"""


class HilbkzError(Exception):
    """Base class for all library errors."""


class DivisionByZero(HilbkzError, ZeroDivisionError):
    pass


class NotAMonomial(HilbkzError, ArithmeticError):
    pass


class SizeMismatch(HilbkzError, ValueError):
    pass


class DimensionMismatch(HilbkzError, ValueError):
    pass


class NonRationalSpectrum(HilbkzError, ValueError):
    pass


class NotNilpotent(HilbkzError, ValueError):
    pass


class PreconditionFailed(HilbkzError, ValueError):
    pass


class NotRegular(PreconditionFailed):
    pass


class NotRelevant(PreconditionFailed):
    pass


class DegenerateParameters(HilbkzError, ValueError):
    pass


class LabelMismatch(HilbkzError, ValueError):
    pass


class OrderMismatch(HilbkzError, ValueError):
    pass


class NonGeneric(HilbkzError, ValueError):
    def __init__(self, i, j, msg=None):
        self.pair = (i, j)
        super().__init__(msg or f"theta is not generic: cyclic sum theta_{i}+...+theta_{j-1} vanishes")


class NotInChart(HilbkzError, ValueError):
    pass


class ZeroModulus(HilbkzError, ValueError):
    pass


class ParamsNotDistinct(HilbkzError, ValueError):
    pass


class ChainRelationViolated(HilbkzError, ValueError):
    def __init__(self, index, msg=None):
        self.index = index
        super().__init__(msg or f"chain relation fails on component V_{index}")
