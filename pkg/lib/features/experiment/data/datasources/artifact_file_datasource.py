"""Plain file access for the outputs directory."""

import logging
from pathlib import Path

from lib.core.errors.app_errors import ArtifactIOError

PROBE_NAME = ".write-probe"

logger = logging.getLogger(__name__)


class ArtifactFileDatasource:
    def ensure_writable(self, directory: Path) -> Path:
        """Create ``directory`` and prove a file can be written there."""
        directory = Path(directory)
        probe = directory / PROBE_NAME
        try:
            directory.mkdir(parents=True, exist_ok=True)
            probe.write_text("", encoding="utf-8")
            probe.unlink()
        except OSError as error:
            raise ArtifactIOError(f"output directory {directory} is not writable: {error}") from error
        return directory

    def write_text(self, path: Path, text: str) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot write {path}: {error}") from error
        logger.debug("Wrote %s", path)
        return path

    def read_text(self, path: Path) -> str:
        path = Path(path)
        if not path.exists():
            raise ArtifactIOError(f"missing artifact: expected {path}")
        try:
            return path.read_text(encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot read {path}: {error}") from error
