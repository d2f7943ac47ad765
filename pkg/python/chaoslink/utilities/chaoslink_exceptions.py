__all__ = ["ChaosLinkError", "ConfigurationError", "DegenerateSignalError", "DimensionMismatchError",
           "DivergenceError", "INPUT_ERRORS", "InvalidImageError", "InvalidStateError", "KeyFileError",
           "ResultsDatabaseError", "SequenceTooShortError"]

class ChaosLinkError(Exception):
    """Base class for all package errors.
    """
    pass

class InvalidStateError(ChaosLinkError):
    """Used when a chaotic state has non-finite components.
    """
    pass

class DivergenceError(ChaosLinkError):
    """Used when an integration overflows or produces NaN.

    Parameters
    ----------
    step_index : int
        The 1-based index of the step that produced the non-finite state.
    message : str, optional
        Extra context for the error.
    """

    def __init__(self, step_index, message=None):
        self.step_index = step_index
        text = "Integration diverged at step {}".format(step_index)
        if message is not None:
            text = "{}: {}".format(text, message)
        ChaosLinkError.__init__(self, text)

class ConfigurationError(ChaosLinkError):
    """Used when a configuration value or operation precondition is invalid.
    """
    pass

class InvalidImageError(ChaosLinkError):
    """Used when an image is unreadable or violates a dimension constraint.
    """
    pass

class DimensionMismatchError(ChaosLinkError):
    """Used when two objects that must agree in size do not.
    """
    pass

class KeyFileError(ChaosLinkError):
    """Used when a key bundle file cannot be parsed.
    """
    pass

class DegenerateSignalError(ChaosLinkError):
    """Used when a zero-power signal is given a finite signal-to-noise ratio or samples are not finite.
    """
    pass

class SequenceTooShortError(ChaosLinkError):
    """Used when a bit sequence is shorter than a randomness test requires.
    """
    pass

class ResultsDatabaseError(ChaosLinkError):
    """Used when there are errors writing to the results database.
    """
    pass

INPUT_ERRORS = (ConfigurationError, InvalidImageError, DimensionMismatchError, KeyFileError,
                SequenceTooShortError, IOError)
"""Errors caused by what the user handed in, reported with the input-error exit code."""
