"""JSON reporter for computed documents.

Documents are frozen pydantic models; ``model_dump_json()`` emits fields
in declaration order with compact separators, so the output is
byte-deterministic.
"""

from __future__ import annotations

import logging
from pathlib import Path

from pydantic import BaseModel

logger = logging.getLogger(__name__)


class JSONReporter:
    """Reporter that renders documents as compact JSON."""

    @property
    def name(self) -> str:
        """Return the reporter name."""
        return "json"

    def render(self, document: BaseModel) -> str:
        """Return the JSON text of ``document``."""
        return document.model_dump_json()

    def write(self, document: BaseModel, path: str | Path) -> Path:
        """Write ``document`` to ``path``, creating parent directories.

        Args:
            document: The document to write.
            path: Destination file.

        Returns:
            The path written.
        """
        output_path = Path(path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(document) + "\n", encoding="utf-8")
        logger.info("JSON report written to %s", output_path)
        return output_path
