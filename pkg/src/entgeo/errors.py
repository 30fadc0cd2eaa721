"""Exception hierarchy shared by every entgeo module."""


class EntGeoError(Exception):
    pass


class ParseError(EntGeoError, ValueError):
    pass


class DimensionError(EntGeoError, ValueError):
    pass


class NormalizationError(EntGeoError, ValueError):
    pass


class PartitionError(EntGeoError, ValueError):
    pass


class SpectrumError(EntGeoError, ValueError):
    pass


class ProjectionUndefined(EntGeoError, ValueError):
    pass


class PreconditionError(EntGeoError, ValueError):
    pass


class NotAChainError(EntGeoError, ValueError):
    pass


class InvalidCoordSet(EntGeoError, ValueError):
    pass


class GaugeDomainError(EntGeoError, ValueError):
    pass


# posets

class CycleError(EntGeoError, ValueError):
    pass


class UnknownElementError(EntGeoError, KeyError):
    pass


class DuplicateCoverError(EntGeoError, ValueError):
    pass


class NotBoundedError(EntGeoError, ValueError):
    pass


class SizeLimitError(EntGeoError, ValueError):
    pass


class NotALatticeError(EntGeoError, ValueError):
    pass


class NotOrthocomplementationError(EntGeoError, ValueError):
    pass


# construction

class NotGradedError(EntGeoError, ValueError):
    pass


class EmptyCoreWarning(UserWarning):
    """The stripped poset is empty, so the construction collapses to one point."""


class IsoFailure(EntGeoError):
    """An expected order-isomorphism failed; ``pair`` holds the first violation."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
