# Document the purpose of the logging helper module.
"""Logging setup shared by the circa command line."""
# Overview: Resolves the log level and configures stderr logging once per process.
# Details: Level precedence is --log-level, then the CIRCA_LOG environment variable, then WARNING.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for handler configuration.
import logging
# Import os to read the environment override.
import os

# Environment variable that selects the default log level.
LOG_ENV_VAR = "CIRCA_LOG"
# Fallback level when neither the flag nor the environment is set.
DEFAULT_LEVEL = "WARNING"
# Level names accepted by the flag and the environment.
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
# Log line format; the logger name identifies the circa module.
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


# Resolve the effective log level name.
def resolve_level(flag_value: str | None = None) -> str:
    """Return the log level from the flag, the environment or the default."""
    # Prefer the explicit flag, then the environment variable.
    level = flag_value or os.environ.get(LOG_ENV_VAR) or DEFAULT_LEVEL
    # Normalise so "info" and "INFO" both work.
    level = level.upper()
    # Unknown environment values fall back to the default.
    return level if level in LOG_LEVELS else DEFAULT_LEVEL


# Configure root logging for a CLI run.
def configure_logging(flag_value: str | None = None) -> logging.Logger:
    """Configure stderr logging and return the package logger."""
    # Initialise logging on stderr so stdout stays reserved for reports.
    logging.basicConfig(level=resolve_level(flag_value), format=LOG_FORMAT)
    # Return the package logger for the caller.
    return logging.getLogger("circa")
