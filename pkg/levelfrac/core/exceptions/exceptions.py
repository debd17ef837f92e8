EXIT_GENERIC = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNRESOLVED = 4


class LevelFracError(Exception):
    """Base class of every error raised by levelfrac"""

    exit_code = EXIT_GENERIC

    def __init__(self, msg: str = ""):
        """
        Initialize error.

        :param str msg: human readable description
        """
        self.msg = msg or self.__class__.__name__
        super().__init__(self.msg)


# INTERPOLATION
class NoInterface(LevelFracError):
    """No edge of the cell changes sign"""


class DegenerateEdge(LevelFracError):
    """The level-set restriction along a cell edge is identically zero"""


# ANALYTIC INTEGRATION
class PoleInRange(LevelFracError):
    """The rational interface has a pole strictly inside the integration range"""


class DegenerateDenominator(LevelFracError):
    """A closed-form antiderivative divides by a vanishing quantity"""


class Unresolved(LevelFracError):
    """A cell could not be resolved analytically"""

    exit_code = EXIT_UNRESOLVED


class NotSplittable(LevelFracError):
    """A cell cannot be decomposed into elementary pieces"""


class BothZero(LevelFracError):
    """atan2 called with both arguments equal to zero"""


# GRID
class SpecOutOfDomain(LevelFracError):
    """A shape does not fit into the unit domain"""

    exit_code = EXIT_USAGE


class NotDivisible(LevelFracError):
    """Node intervals are not divisible by the coarsening factor"""

    exit_code = EXIT_USAGE


class DimensionMismatch(LevelFracError):
    """Grid header and payload disagree on dimensions"""

    exit_code = EXIT_PARSE


class ParseError(LevelFracError):
    """Malformed grid file"""

    exit_code = EXIT_PARSE

    def __init__(self, msg: str = "", line: int = None, offset: int = None):
        """
        Initialize parse error.

        :param str msg: description
        :param int line: 1-based line number of the offending token
        :param int offset: 0-based value offset in the payload
        """
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append("line {}".format(line))
        if offset is not None:
            where.append("value #{}".format(offset))
        if where:
            msg = "{} ({})".format(msg, ", ".join(where))
        super().__init__(msg)


# METRICS
class ShapeMismatch(LevelFracError):
    """Two fraction fields do not have the same shape"""


class DivideByZero(LevelFracError):
    """A normalizing sum is zero"""


class IncompatibleLevels(LevelFracError):
    """Fine fractions are not a whole number of refinements of the coarse grid"""


class DegenerateFit(LevelFracError):
    """Not enough (or invalid) samples to fit a convergence order"""

    exit_code = EXIT_USAGE
