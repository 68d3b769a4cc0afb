"""Exception types shared across the package."""


class LeakNetError(Exception):
    """Base class for every error raised by leaknet."""


class SelfLoopRejected(LeakNetError):
    """An edge whose two endpoints are the same country."""


class UnknownNode(LeakNetError):
    """A country code that is not present in the network."""


class EmptyNetwork(LeakNetError):
    """An operation that needs at least one node got none."""


class TooFewEdges(LeakNetError):
    """Rewiring or curve estimation needs at least two edges."""


class ClubTooSmall(LeakNetError):
    """Fewer than two nodes clear the requested threshold."""


class InsufficientEdges(LeakNetError):
    """The club has no internal edges, so the weighted ratio is undefined."""


class MalformedHeader(LeakNetError):
    """A CSV input is missing one of its required columns."""


class CsvSyntax(LeakNetError):
    """A CSV input violates RFC-4180 quoting."""
