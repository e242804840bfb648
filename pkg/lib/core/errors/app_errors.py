"""Custom exceptions used across the project."""

from lib.core.constants.app_constants import (
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_TRAINING_FAILURE,
    EXIT_UNEXPECTED,
)


class FcmError(Exception):
    """Base exception for fuzzy cognitive map failures."""


class StructuralError(FcmError):
    """Raised when dimensions, labels, or universes do not line up."""


class DomainError(FcmError):
    """Raised when a value falls outside its admissible range."""


class ResourceError(FcmError):
    """Raised when a request would exceed an enumeration guard."""


class NumericError(FcmError):
    """Raised when training produces a non-finite loss."""

    def __init__(self, message: str, epoch: int) -> None:
        super().__init__(message)
        self.epoch = epoch


class TrainingError(FcmError):
    """Raised when training one expert of a scenario fails."""

    def __init__(self, message: str, expert: str) -> None:
        super().__init__(message)
        self.expert = expert


class ConfigError(FcmError):
    """Raised when a scenario configuration is invalid."""


class ArtifactIOError(FcmError):
    """Raised when an output artifact cannot be read or written."""


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit status."""
    if isinstance(error, (TrainingError, NumericError)):
        return EXIT_TRAINING_FAILURE
    if isinstance(error, ArtifactIOError):
        return EXIT_IO_ERROR
    if isinstance(error, (ConfigError, StructuralError, DomainError, ResourceError)):
        return EXIT_CONFIG_ERROR
    return EXIT_UNEXPECTED
