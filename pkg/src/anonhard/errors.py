"""Exception hierarchy shared by all modules."""


class AnonHardError(Exception):
    """Base class for all library errors."""


class LengthMismatch(AnonHardError):
    pass


class EmptyCluster(AnonHardError):
    pass


class InvalidPartition(AnonHardError):
    pass


class Infeasible(AnonHardError):
    pass


class IndexOutOfRange(AnonHardError):
    pass


class NotCubic(AnonHardError):
    pass


class NotSimple(AnonHardError):
    pass


class NotACover(AnonHardError):
    pass


class MissingProvenance(AnonHardError):
    pass


class NotCanonical(AnonHardError):
    pass


class NoEdgeGadgetAssigned(AnonHardError):
    pass


class EdgeRowConflict(AnonHardError):
    pass


class TooLarge(AnonHardError):
    pass
