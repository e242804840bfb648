"""Tests for shared error mapping, results, logging and random streams."""

import logging
from importlib import metadata

import numpy as np

from lib.core.constants.app_constants import (
    EVALUATION_STREAM,
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_TRAINING_FAILURE,
    EXIT_UNEXPECTED,
    INIT_STREAM,
    PACKAGE_VERSION,
    SAMPLING_STREAM,
)
from lib.core.errors.app_errors import (
    ArtifactIOError,
    ConfigError,
    DomainError,
    NumericError,
    ResourceError,
    StructuralError,
    TrainingError,
    exit_code_for,
)
from lib.core.logging import logger as logger_module
from lib.core.utils.result import Result
from lib.core.utils.rng import stream
from lib.core.utils.version import package_version


def test_exit_code_for_maps_error_classes() -> None:
    assert exit_code_for(ConfigError("bad")) == EXIT_CONFIG_ERROR
    assert exit_code_for(StructuralError("shape")) == EXIT_CONFIG_ERROR
    assert exit_code_for(DomainError("range")) == EXIT_CONFIG_ERROR
    assert exit_code_for(ResourceError("too big")) == EXIT_CONFIG_ERROR
    assert exit_code_for(NumericError("nan", epoch=3)) == EXIT_TRAINING_FAILURE
    assert exit_code_for(TrainingError("nan", expert="e1")) == EXIT_TRAINING_FAILURE
    assert exit_code_for(ArtifactIOError("missing")) == EXIT_IO_ERROR
    assert exit_code_for(RuntimeError("boom")) == EXIT_UNEXPECTED


def test_training_error_carries_expert_and_numeric_error_epoch() -> None:
    assert TrainingError("diverged", expert="drop-C1").expert == "drop-C1"
    assert NumericError("diverged", epoch=7).epoch == 7


def test_result_failure_keeps_exit_code() -> None:
    result = Result.failure("bad config", exit_code=EXIT_CONFIG_ERROR)

    assert result.is_success is False
    assert result.to_dict() == {
        "success": False,
        "message": "bad config",
        "data": None,
        "exit_code": EXIT_CONFIG_ERROR,
    }


def test_result_success_converts_payload_with_to_dict() -> None:
    class Payload:
        def to_dict(self) -> dict:
            return {"value": 1}

    assert Result.success(data=Payload()).to_dict()["data"] == {"value": 1}


def test_configure_logger_reads_level_from_env(monkeypatch) -> None:
    captured = {}
    monkeypatch.setenv("FCM_LOG_LEVEL", "debug")
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: captured.update(kwargs))

    logger_module.configure_logger()

    assert captured["level"] == logging.DEBUG


def test_configure_logger_falls_back_to_info(monkeypatch) -> None:
    captured = {}
    monkeypatch.setenv("FCM_LOG_LEVEL", "chatty")
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: captured.update(kwargs))

    logger_module.configure_logger()

    assert captured["level"] == logging.INFO


def test_streams_are_reproducible_and_disjoint() -> None:
    first = stream(42, SAMPLING_STREAM).integers(0, 2**31, size=8)
    again = stream(42, SAMPLING_STREAM).integers(0, 2**31, size=8)
    init = stream(42, INIT_STREAM).integers(0, 2**31, size=8)
    evaluation = stream(42, EVALUATION_STREAM).integers(0, 2**31, size=8)

    assert np.array_equal(first, again)
    assert not np.array_equal(first, init)
    assert not np.array_equal(first, evaluation)
    assert not np.array_equal(init, evaluation)


def test_package_version_falls_back_to_the_source_constant(monkeypatch) -> None:
    def not_installed(name: str) -> str:
        raise metadata.PackageNotFoundError(name)

    monkeypatch.setattr(metadata, "version", not_installed)

    assert package_version() == PACKAGE_VERSION
    assert package_version.__doc__
