"""Exception hierarchy. The CLI reports the class name of the raised error."""


class L1HomologyError(Exception):
    """Base class for domain errors."""


class InvalidFacet(L1HomologyError):
    pass


class DegreeError(L1HomologyError):
    pass


class DegreeMismatch(L1HomologyError):
    pass


class NotACycle(L1HomologyError):
    pass


class NotClosed(L1HomologyError):
    pass


class NotOrientable(L1HomologyError):
    pass


class MalformedProgram(L1HomologyError):
    pass


class NotACocycle(L1HomologyError):
    pass


class PairingNotOne(L1HomologyError):
    pass


class NotACovering(L1HomologyError):
    pass


class BadBasepoint(L1HomologyError):
    pass
