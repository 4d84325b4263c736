from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Optional, Tuple

from shared.config.config_manager import BaseConfig, ConfigManager

from .exceptions import ConfigError, NonzeroQError, SigmaIsIdentityError

FORMATS = ("plain", "json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
SUITES = ("twist", "skew", "jacobi", "three-way", "inner", "decomp", "grading", "mod-inner", "ssets", "ore")


def parse_q(text: Optional[str]) -> Optional[Fraction]:
    """'NUM/DEN' or an integer; empty means q stays formal"""
    if text is None or not text.strip():
        return None
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"q must look like NUM/DEN, got {text!r}")


def parse_s_values(text: str) -> Tuple[int, ...]:
    try:
        values = tuple(dict.fromkeys(int(part) for part in text.split(",") if part.strip()))
    except ValueError:
        raise ConfigError(f"s must be an integer or a comma-separated list of integers, got {text!r}")
    if not values:
        raise ConfigError("at least one value of s is required")
    return values


@dataclass
class RunConfig(BaseConfig):
    """Configuration for a qwitt run"""

    # Twist parameters
    s_values: Tuple[int, ...] = (2,)
    q_value: Optional[Fraction] = None

    # Ranges
    window: Tuple[int, int] = (-4, 4)
    check_window: int = 8

    # Randomized checks
    seed: int = 0
    samples: int = 20

    # Output
    output_format: str = "plain"
    log_level: str = "WARNING"
    suites: Tuple[str, ...] = SUITES

    @classmethod
    def from_env(cls) -> "RunConfig":
        """Load configuration from environment variables"""
        ConfigManager.load_env()

        try:
            config = cls(
                s_values=parse_s_values(ConfigManager.get_optional_str("QWITT_S", "2")),
                q_value=parse_q(ConfigManager.get_optional_str("QWITT_Q")),
                window=ConfigManager.get_range("QWITT_WINDOW", "-4..4"),
                check_window=ConfigManager.get_int("QWITT_CHECK_WINDOW", 8),
                seed=ConfigManager.get_int("QWITT_SEED", 0),
                samples=ConfigManager.get_int("QWITT_SAMPLES", 20),
                output_format=ConfigManager.get_optional_str("QWITT_FORMAT", "plain"),
                log_level=ConfigManager.get_optional_str("QWITT_LOG_LEVEL", "WARNING").upper(),
            )
        except ValueError as e:
            raise ConfigError(str(e))

        config.validate()
        return config

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Copy with every non-None override applied, validated"""
        config = replace(self, **{key: value for key, value in overrides.items() if value is not None})
        config.validate()
        return config

    def validate(self) -> None:
        lo, hi = self.window
        if lo > hi:
            raise ConfigError(f"empty window {lo}..{hi}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}, expected one of {', '.join(FORMATS)}")
        unknown = [suite for suite in self.suites if suite not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s): {', '.join(unknown)}")
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}")
        if self.check_window < 0 or self.samples < 0:
            raise ConfigError("check window and sample count must be nonnegative")
        if self.q_value is not None:
            if self.q_value == 0:
                raise NonzeroQError()
            if self.q_value == 1 and 1 in self.s_values:
                raise SigmaIsIdentityError()

    @property
    def qmode(self) -> str:
        return "formal" if self.q_value is None else str(self.q_value)
