"""Exception types raised across the package."""


class LipwalkError(Exception):
    """Base class for all errors raised by lipwalk."""


class InvalidOrderError(LipwalkError, ValueError):
    """A graph size parameter is below the minimum for its class."""


class InvalidArgumentError(LipwalkError, ValueError):
    pass


class DisconnectedGraphError(LipwalkError, ValueError):
    pass


class NoCycleError(LipwalkError, ValueError):
    pass


class TransformNotApplicableError(LipwalkError, ValueError):
    """The KC-transformation precondition min(|V_ab|, |V_ba|) > 1 fails."""


class SweepLimitError(LipwalkError, ValueError):
    """A requested sweep size exceeds the configured cap."""


class UndefinedAverageError(LipwalkError, ArithmeticError):
    """Average range requested over an empty set of mappings.

    Only happens in strong mode, e.g. on graphs with an odd cycle.
    """

    def __init__(self, message="average undefined: no strong mappings exist", mapping_count=0):
        super().__init__(message)
        self.mapping_count = mapping_count
