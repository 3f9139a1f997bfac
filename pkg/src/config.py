import logging
import os

from dotenv import load_dotenv


def _level_names():
    # logging.getLevelNamesMapping is Python 3.11+; fall back to the same mapping on older interpreters.
    getter = getattr(logging, "getLevelNamesMapping", None)
    return getter() if getter is not None else dict(logging._nameToLevel)


ENV_PREFIX = "CHESS_FERRERS_"


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{ENV_PREFIX}{name} must be at least {minimum}, got {value}")
    return value


class Config:
    """
    Runtime settings read from the environment (and a .env file, if present).

    Command-line flags take precedence over every value here.
    """

    def __init__(self):
        load_dotenv()  # Load environment variables from .env file
        level = os.getenv(ENV_PREFIX + "LOG_LEVEL", "WARNING").strip().upper()
        if level not in _level_names():
            raise ValueError(f"{ENV_PREFIX}LOG_LEVEL is not a logging level: {level!r}")
        self.log_level = level
        self.jobs = _env_int("JOBS", 1, 1)
        self.counterexample_cap = _env_int("COUNTEREXAMPLE_CAP", 20, 1)
        self.cell_size = _env_int("CELL_SIZE", 20, 4)

    def get_summary(self) -> str:
        return (
            f"Log level: {self.log_level}\n"
            f"Jobs: {self.jobs}\n"
            f"Counterexample cap: {self.counterexample_cap}\n"
            f"Cell size: {self.cell_size}"
        )
