"""Exception hierarchy shared by all modules."""


class CyclicIdealError(ValueError):
    """Base class for every error raised by this package."""


class TooSmall(CyclicIdealError):
    pass


class NotAdmissible(CyclicIdealError):
    pass


class PathNotInQuiver(CyclicIdealError):
    pass


class InvalidIdeal(CyclicIdealError):
    """Path set is not up-closed, or an exotic ideal was requested with k > 1."""


class ExoticUnsupported(CyclicIdealError):
    pass


class NotIndecomposable(CyclicIdealError):
    pass


class QuiverMismatch(CyclicIdealError):
    pass


class PreconditionViolated(CyclicIdealError):
    pass


class WidthOutOfRange(CyclicIdealError):
    pass


class InvalidDyck(CyclicIdealError):
    pass


class EmptyComponent(CyclicIdealError):
    pass


class SizeBound(CyclicIdealError):
    """Raised when an enumeration would exceed its configured cap."""
