"""Installed package version lookup."""

from importlib import metadata

from lib.core.constants.app_constants import PACKAGE_NAME, PACKAGE_VERSION


def package_version() -> str:
    """Installed distribution version, or the source-tree constant when not installed."""
    try:
        return metadata.version(PACKAGE_NAME)
    except metadata.PackageNotFoundError:
        return PACKAGE_VERSION
