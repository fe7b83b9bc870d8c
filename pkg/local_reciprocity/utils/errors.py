"""Exception hierarchy shared by every subpackage."""


class CohomologyError(Exception):
    """Base class for all errors raised by local_reciprocity."""


class MalformedHom(CohomologyError, ValueError):
    """A homomorphism matrix has the wrong shape or is not well defined."""


class NonComposable(CohomologyError, ValueError):
    """Two maps do not share the group they are supposed to share."""


class NotAComplex(CohomologyError, ValueError):
    """d_out composed with d_in is not the zero map."""


class NotACycle(CohomologyError, ValueError):
    """An element handed to classify is not killed by the outgoing map."""


class InvalidGroup(CohomologyError, ValueError):
    """A multiplication table or subgroup fails validation."""


class NotNormal(InvalidGroup):
    """A quotient was requested by a subgroup that is not normal."""


class InvalidModule(CohomologyError, ValueError):
    """A G-module or G-module map fails validation."""


class NotExact(InvalidModule):
    """A sequence of G-module maps is not short exact."""


class NotACocycle(CohomologyError, ValueError):
    """A cochain does not satisfy the cocycle identity."""


class UnsupportedBidegree(CohomologyError, ValueError):
    """Cup product requested outside the supported bidegrees."""


class DegreeOutOfRange(CohomologyError, ValueError):
    """A cohomological degree outside the supported range."""


class NotCyclic(CohomologyError, ValueError):
    """An operation that needs a cyclic group got a non-cyclic one."""


class InfiniteCohomology(CohomologyError, ArithmeticError):
    """A Tate group that should be finite has a free factor."""


class NotAUnit(CohomologyError, ValueError):
    """A non-unit was passed where a unit is required."""


class SizeCapExceeded(CohomologyError, ValueError):
    """A cochain table would exceed the configured entry cap."""


class FieldCapExceeded(CohomologyError, ValueError):
    """A finite field or tower exceeds the configured size caps."""


class LiftFailed(CohomologyError, RuntimeError):
    """Internal: an element could not be lifted through a surjection."""


class DecompositionFailed(CohomologyError, RuntimeError):
    """Internal: the unit group of a tower could not be decomposed."""
