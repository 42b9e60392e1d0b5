# frameworks/config.py
from __future__ import annotations

import logging
import os

from frameworks.errors import ResourceGuardError

logger = logging.getLogger(__name__)

# --- Size guards (n-type guards are overridden together by MCQ_MAX_N) ---
DEFAULT_GUARDS: dict[str, int] = {
    "permutations": 12,
    "decorated": 10,
    "eulerian": 8,
    "gf_order": 6,
    "uniform": 8,
    "q_uniform": 12,
}

# Not covered by MCQ_MAX_N
DEFAULT_MAX_FLATS = 5000
DEFAULT_MAX_SHUFFLE_DEGREE = 14

DEFAULT_WORKERS = 4
DEFAULT_LOG_LEVEL = "WARNING"

# Set by the --max-n-guard CLI flag; wins over the environment.
_cli_max_n: int | None = None


def set_max_n_override(value: int | None) -> None:
    """Override every n-type guard for the current process (None resets)."""
    global _cli_max_n
    if value is not None and value < 0:
        raise ValueError("guard override must be nonnegative")
    _cli_max_n = value
    if value is not None:
        logger.warning(f"Size guards overridden from the command line: n <= {value}")


def _env_int(name: str) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def max_n(guard: str) -> int:
    """Current limit for an n-type guard."""
    if guard not in DEFAULT_GUARDS:
        raise KeyError(f"Unknown guard: {guard}")
    if _cli_max_n is not None:
        return _cli_max_n
    env = _env_int("MCQ_MAX_N")
    if env is not None:
        return env
    return DEFAULT_GUARDS[guard]


def max_flats() -> int:
    env = _env_int("MCQ_MAX_FLATS")
    return env if env is not None else DEFAULT_MAX_FLATS


def max_shuffle_degree() -> int:
    return DEFAULT_MAX_SHUFFLE_DEGREE


def workers() -> int:
    env = _env_int("MCQ_WORKERS")
    return max(1, env) if env is not None else DEFAULT_WORKERS


def log_level() -> str:
    return os.getenv("MCQ_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()


def check_guard(guard: str, requested: int, *, module: str = "mcq") -> None:
    """Raise ResourceGuardError when ``requested`` exceeds the named n-guard."""
    limit = max_n(guard)
    if requested > limit:
        raise ResourceGuardError(guard=guard, limit=limit, requested=requested, module=module)


def check_flats(count: int) -> None:
    limit = max_flats()
    if count > limit:
        raise ResourceGuardError(guard="flats", limit=limit, requested=count, module="chowfy")
