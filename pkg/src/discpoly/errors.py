class GeometryError(ValueError):
    """Base class for precondition violations in the kernel."""


class DegenerateChord(GeometryError):
    pass


class ChordTooLong(GeometryError):
    pass


class OutOfRange(GeometryError):
    pass


class EmptyInput(GeometryError):
    pass


class NotUnit(GeometryError):
    pass


class NotInUnitDisc(GeometryError):
    """The point set does not fit in a closed unit circle, so its r-hull is undefined."""


class HeightOutOfRange(GeometryError):
    pass


class PointsOutside(GeometryError):
    pass


class ZeroArea(GeometryError):
    pass


class NotRConvex(GeometryError):
    """Minimum boundary curvature does not exceed 1/r."""


class DegenerateCap(GeometryError):
    pass
