"""Exception hierarchy shared by all modules."""


class WheelError(Exception):
    """Base class for every error raised by this package."""


class InputError(WheelError, ValueError):
    """Malformed or out-of-contract input (maps to CLI exit code 2)."""


class DegenerateError(WheelError):
    """A general-position assumption was violated (zero orientation sign)."""


class NotConowheelError(WheelError):
    """Some point of H is not extreme in H + {w}."""


class FlatRetryExhausted(WheelError):
    """No generic 2-flat was found within the retry budget."""


class BoundExceeded(WheelError):
    """An enumeration was asked for a size beyond its configured bound."""


class NotRealizableError(WheelError):
    """Combinatorial data that no conowheel set produces."""


class InconsistentProfile(WheelError):
    """An embracing-count profile that does not come from a conowheel set."""


class NeedsWheelError(WheelError):
    """A count that is only defined by formula for wheel sets (w interior)."""
