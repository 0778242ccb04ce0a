import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from typing import Dict, Optional

from dotenv import load_dotenv

from .exceptions import ConfigError

load_dotenv()

CAPS_ENV = "HYPERFACTOR_CAPS"
LOG_LEVEL_ENV = "HYPERFACTOR_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Caps:
    max_vertices: int = 4096
    max_edges: int = 1_000_000
    iso_vertices: int = 64
    rank: int = 20
    oracle_pfd_vertices: int = 12
    oracle_distance_vertices: int = 8
    oracle_dispensable_vertices: int = 20
    oracle_map_size: int = 7
    gen_attempts: int = 100_000
    max_classes: int = 16

    def override(self, **values: Optional[int]) -> "Caps":
        """Return a copy with every non-None value replaced."""
        changes = {key: value for key, value in values.items() if value is not None}
        unknown = set(changes) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigError(f"unknown cap(s): {', '.join(sorted(unknown))}")
        return replace(self, **changes)


def parse_caps(text: str) -> Dict[str, int]:
    """Parse the ``key=value,...`` format of HYPERFACTOR_CAPS."""
    parsed: Dict[str, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ConfigError(f"{CAPS_ENV}: expected key=value, got {chunk!r}")
        try:
            parsed[key.strip()] = int(value.strip())
        except ValueError:
            raise ConfigError(f"{CAPS_ENV}: value for {key.strip()!r} is not an integer")
    return parsed


def caps_from_env(environ: Optional[Dict[str, str]] = None) -> Caps:
    environ = os.environ if environ is None else environ
    raw = environ.get(CAPS_ENV, "")
    return Caps().override(**parse_caps(raw))


@lru_cache(maxsize=1)
def get_caps() -> Caps:
    return caps_from_env()


def resolve_caps(caps: Optional[Caps]) -> Caps:
    return caps if caps is not None else get_caps()


def log_level() -> str:
    return os.getenv(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
