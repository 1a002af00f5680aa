"""Exception hierarchy shared by every module."""


class HeisenbergError(Exception):
    """Base class for all library errors."""


class NotOnQuadricError(HeisenbergError, ValueError):
    pass


class NotLatticePointError(HeisenbergError, ValueError):
    pass


class BackendMismatchError(HeisenbergError, TypeError):
    pass


class PointAtInfinityError(HeisenbergError):
    """A planar coordinate was requested for a point with vanishing first
    projective coordinate."""


class InversionAtOriginError(PointAtInfinityError):
    pass


class ConjugationError(HeisenbergError):
    """Complex conjugation of a number-field element that does not stay in
    its field (or cannot be expressed there)."""


class PrecisionCapError(HeisenbergError):
    """Ball arithmetic could not settle a decision before the precision cap."""


class CertificationError(HeisenbergError):
    pass


class SelectionError(HeisenbergError):
    """No eigenvector of the requested kind (finite, on the quadric)."""


class TorsionMatrixError(HeisenbergError):
    pass


class NotUnitaryError(HeisenbergError, ValueError):
    pass


class DegenerateOrbitError(HeisenbergError):
    pass
