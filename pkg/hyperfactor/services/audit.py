import logging
from typing import Any

logger = logging.getLogger("hyperfactor.audit")


def log_action(action: str, object_type: str, **details: Any) -> None:
    """One line per executed command: what ran, on what, and how it ended."""
    fields = " ".join(f"{key}={details[key]}" for key in sorted(details))
    logger.info("%s %s %s", action, object_type, fields)
