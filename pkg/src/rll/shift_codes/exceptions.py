# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Exceptions raised by the library
"""


class ShiftCodesError(Exception):
    """
    Base class for every error raised by rll.shift_codes
    """

    pass


class InvalidParametersError(ShiftCodesError, ValueError):
    """
    Raised when (d, k), a length, a weight or a shift budget is out of range
    """

    pass


class RepresentationError(ShiftCodesError, ValueError):
    """
    Raised when a string or position vector is malformed
    """

    pass


class DomainError(ShiftCodesError, ValueError):
    """
    Raised when an argument lies outside the domain of a function, e.g. a relative
    weight outside the feasible interval or a vector that does not sum to zero
    """

    pass


class BudgetExceededError(ShiftCodesError):
    """
    Raised when an exhaustive search would exceed its configured budget
    """

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(
            f"{what} has size {size}, which exceeds the budget of {budget}. "
            "Use smaller parameters or raise the budget."
        )
        self.what = what
        self.size = size
        self.budget = budget


class DecodeFailure(ShiftCodesError):
    """
    Raised when no codeword is compatible with a received word
    """

    pass


class VerificationError(ShiftCodesError):
    """
    Raised when a construction fails its own re-verification
    """

    pass
