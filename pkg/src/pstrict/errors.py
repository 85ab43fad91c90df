"""Exception hierarchy shared by every module."""


class PStrictError(Exception):
    """Base class for all library errors."""


# poset construction
class CycleDetected(PStrictError):
    pass


class RedundantCover(PStrictError):
    pass


class UnknownElement(PStrictError):
    pass


class InvalidParameter(PStrictError):
    pass


class NotAChainProduct(PStrictError):
    pass


# shapes
class NotAPartition(PStrictError):
    pass


class MuNotContained(PStrictError):
    pass


class ShapeExceedsEll(PStrictError):
    pass


class NotConvex(PStrictError):
    pass


class InvalidShape(PStrictError):
    pass


# labelings
class EmptyRestriction(PStrictError):
    pass


class InconsistentRestriction(PStrictError):
    pass


class InvalidLabeling(PStrictError):
    pass


class InvalidResult(PStrictError):
    """Raised when an action produces an object violating its invariants."""


class UnsupportedRestriction(PStrictError):
    pass


class NotFullShape(PStrictError):
    pass


class StateSpaceCap(PStrictError):
    """Raised when an enumeration grows past the configured cap."""


# Q-partitions
class InvalidBounds(PStrictError):
    pass


class InvalidQPartition(PStrictError):
    pass


class ToggleOnFixedElement(PStrictError):
    pass


class NotAGammaPoset(PStrictError):
    pass


class UnsupportedFamily(PStrictError):
    pass


# bijections
class NotInDomain(PStrictError):
    pass


class InvalidGTPattern(PStrictError):
    pass


class RowOutOfRange(PStrictError):
    pass


class NotAChainP(PStrictError):
    pass


# jeu de taquin
class MalformedIntermediate(PStrictError):
    pass


# tableaux and polynomials
class InvalidTableau(PStrictError):
    pass


class FlagNotMonotone(PStrictError):
    pass


class NonIntegerResult(PStrictError):
    pass


class NonPolynomial(PStrictError):
    pass


# dynamics
class NotABijection(PStrictError):
    pass


class NotRanked(PStrictError):
    pass


class NotAntipodal(PStrictError):
    pass
