"""Exception types shared across the package."""


class MwpdvError(Exception):
    """Base class for all domain errors raised by this package."""


class Disconnected(MwpdvError):
    """The region (or its cutter-offset region) is not connected."""


class EmptyOffset(MwpdvError):
    """No placement of the cutter fits inside the region."""


class NarrowCorridor(MwpdvError):
    """Some pixel cannot be reached by the cutter, so no milling tour exists."""


class ParityViolation(MwpdvError):
    """A boundary loop carries an odd number of strip endpoints (upstream bug)."""


class OddDegree(MwpdvError):
    """An Euler tour was requested on a multigraph with an odd-degree vertex."""


class DisconnectedGraph(MwpdvError):
    """An Euler tour was requested on a disconnected multigraph."""


class NotCovering(MwpdvError):
    """An input scan set that was required to cover the region does not."""


class InstanceTooLarge(MwpdvError):
    """The exact solver budget (size or node count) was exceeded."""


class OffsetCollapse(MwpdvError):
    """An inward offset required by the construction is empty."""


class TopologyChange(MwpdvError):
    """Inward offsets at different depths are not topologically identical."""


class HolesUnsupported(MwpdvError):
    """The requested certificate identity is only defined for hole-free regions."""
