"""Exception types shared across the package."""


class CrosscalError(Exception):
    """Base class for every error raised by this package."""


class InvalidDate(CrosscalError, ValueError):
    """A date's fields violate its calendar's rules."""


class InvalidMonth(CrosscalError, ValueError):
    """Month number outside the calendar's range."""


class OutOfSupportedRange(CrosscalError, ValueError):
    """Date or fixed day falls outside the supported conversion range."""


class UnknownFestival(CrosscalError, LookupError):
    """Festival name not registered for the given calendar."""


class BadRequest(CrosscalError, ValueError):
    """Conversion request satisfies neither (or both) parameter schemas."""


class MissingVariable(CrosscalError, ValueError):
    """A template placeholder has no value in the recipe."""


class AuthError(CrosscalError):
    """Endpoint rejected the credentials."""


class Timeout(CrosscalError):
    """Request did not complete within the configured retries."""


class MalformedResponse(CrosscalError):
    """Endpoint answered with an unparseable payload."""


class JudgeParseFailure(CrosscalError):
    """Judge model output did not contain a readable accuracy field."""


class UnmatchedVerdict(CrosscalError, ValueError):
    """A verdict references an instance id that is not in the run."""


class EmptyGroup(CrosscalError, ValueError):
    """Statistical comparison received an empty group."""


class LengthMismatch(CrosscalError, ValueError):
    """Paired label sequences differ in length."""


class PlanParseFailure(CrosscalError):
    """Planner output could not be parsed into a valid plan."""


class ExecutionError(CrosscalError):
    """A plan step failed during interpretation."""

    def __init__(self, step_index: int, message: str):
        super().__init__(f"step {step_index}: {message}")
        self.step_index = step_index
