from typing import Optional


class SignatureError(ValueError):
    """This exception is used to indicate that two operands live in different
    grading groups, or that a coordinate or coordinate subset does not fit the
    grading group's signature."""

    pass


class ElementSyntaxError(ValueError):
    """This exception is used to indicate that a piece of text could not be
    read as a group ring element, a truncated series or a power expression."""

    pass


class SeriesError(ValueError):
    """This exception is used to indicate that a truncated series does not
    start with the unit or that two series disagree on their order."""

    pass


class EffectivityError(ValueError):
    """This exception is used to indicate that an element with a negative
    coefficient was used where a finite set with a map is required."""

    pass


class GroupTableError(ValueError):
    """This exception is used to indicate that a multiplication table does not
    describe a group, or that generators do not generate it."""

    pass


class ActionError(ValueError):
    """This exception is used to indicate that a group action is not given by
    permutations or is not a homomorphism."""

    pass


class CommutationError(ValueError):
    """This exception is used to indicate that the automorphism does not
    commute with the group action."""

    pass


class WreathSizeError(ValueError):
    """This exception is used to indicate that a wreath product would exceed
    the configured size bound."""

    pass


class DepthError(ValueError):
    """This exception is used to indicate that a node does not carry enough
    nested fixed-point data for the requested order."""

    pass


class UnsupportedError(ValueError):
    """This exception is used to indicate a declared limitation, such as a
    positive dimensional wreath left-hand side at order two or more."""

    pass


class WorkspaceError(ValueError):
    """This exception is used to indicate that a workspace file is malformed
    or refers to something it does not define."""

    def __init__(self, message: str, location: Optional[str] = None) -> None:
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
