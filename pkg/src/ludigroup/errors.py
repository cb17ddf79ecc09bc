"""Exception types shared across the package."""


class LudigroupError(Exception):
    """Base class for all package errors."""


class DegreeMismatchError(LudigroupError, ValueError):
    """Two permutations of different degrees were combined."""


class UnknownLabelError(LudigroupError, KeyError):
    """A generator label does not exist in the table or action space."""


class NonComposableError(LudigroupError, ValueError):
    """Two groupoid arrows were composed with mismatched endpoints."""


class InapplicableMoveError(LudigroupError, ValueError):
    """A partial move was applied at a configuration outside its domain."""

    def __init__(self, label: str, reason: str = ""):
        self.label = label
        self.reason = reason
        msg = f"move {label!r} is not applicable here"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class NodeCapExceededError(LudigroupError, RuntimeError):
    """A search enumerated more configurations than its node cap allows."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"search exceeded the node cap of {cap} configurations")


class NoSolutionError(LudigroupError, RuntimeError):
    """The target lies in a different orbit: mission impossible."""


class MissingSlotRepresentationError(LudigroupError, ValueError):
    """A group-order computation needs slot permutations for every move."""


class NotEnumerableError(LudigroupError, ValueError):
    """The configuration universe cannot be enumerated for this space."""


class InvalidSpecError(LudigroupError, ValueError):
    """A game spec failed validation."""


class OutOfCardsError(LudigroupError, RuntimeError):
    """A constrained session has no card left for the requested generator."""


class SessionTerminatedError(LudigroupError, RuntimeError):
    """The session already ended; no further actions accepted."""


class WrongModeError(LudigroupError, RuntimeError):
    """The requested action does not exist for this archetype or variant."""
