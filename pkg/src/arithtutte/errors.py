"""Exception types raised by the library."""


class ArithTutteError(Exception):
    """Base class for all library errors."""

    kind = "error"


class CapExceededError(ArithTutteError):
    """An enumeration would exceed its configured size cap."""

    kind = "cap-exceeded"

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class GraphFormatError(ArithTutteError, ValueError):
    """Malformed AGF input; ``kind`` names the failure, ``line`` the line number."""

    def __init__(self, kind, line, message):
        self.kind = kind
        self.line = line
        super().__init__(f"line {line}: {message}")


class NotRegularEdgeError(ArithTutteError, ValueError):
    """Deletion or contraction was requested on a dotted edge."""

    kind = "not-regular"


class InadmissibleError(ArithTutteError, ValueError):
    """The evaluation point is not a positive multiple of every edge label."""

    kind = "inadmissible-q"

    def __init__(self, q, lcm):
        self.q = q
        self.lcm = lcm
        super().__init__(f"q={q} is not admissible: L={lcm} does not divide it")
