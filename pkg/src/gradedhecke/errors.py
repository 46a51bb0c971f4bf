"""Exception types shared across the package."""


class GradedHeckeError(Exception):
    """Base class for all package errors."""


class NotPure(GradedHeckeError):
    """Object expected in the weight heart has off-diagonal cohomology."""


class NonHalfIntegerTwist(GradedHeckeError):
    """Tate twist parameter k must satisfy 2k integral."""


class LevelMismatch(GradedHeckeError):
    """Mixed objects live over different point levels."""


class BadLevels(GradedHeckeError):
    """Induction target level does not divide the source level."""


class SystemMismatch(GradedHeckeError):
    """Group elements / Hecke elements belong to different Coxeter systems."""


class BoundExceeded(GradedHeckeError):
    """Group enumeration passed the configured element bound."""


class BasisMismatch(GradedHeckeError):
    """Hecke arithmetic mixing incompatible basis tags."""


class NotTypeA(GradedHeckeError):
    """Operation only defined for type-A (symmetric group) systems."""


class UnknownGenerator(GradedHeckeError):
    """Word refers to a generator not present in the system."""


class RingMismatch(GradedHeckeError):
    """Bimodules over different polynomial realizations."""


class WindowTooSmall(GradedHeckeError):
    """Degree window did not suffice for exact rank/series extraction."""


class NonSemiperfect(GradedHeckeError):
    """Direct-sum decomposition failed to split within configured bounds."""


class SearchExhausted(GradedHeckeError):
    """Homotopy-equivalence isomorphism search hit its attempt bound."""


class ImpureQuotient(GradedHeckeError):
    """Weight filtration has a non-pure associated graded piece."""
