from fractions import Fraction

import pytest

from qwitt.src.kernel.config import SUITES, RunConfig, parse_q, parse_s_values
from qwitt.src.kernel.exceptions import ConfigError, NonzeroQError, SigmaIsIdentityError
from shared.config.config_manager import ConfigManager


def test_parse_q():
    assert parse_q(None) is None
    assert parse_q("  ") is None
    assert parse_q("3/2") == Fraction(3, 2)
    assert parse_q("-2") == Fraction(-2)
    with pytest.raises(ConfigError, match="NUM/DEN"):
        parse_q("two")
    with pytest.raises(ConfigError):
        parse_q("1/0")


def test_parse_s_values():
    assert parse_s_values("2") == (2,)
    assert parse_s_values("-1, 0,3") == (-1, 0, 3)
    assert parse_s_values("2,2,3") == (2, 3)
    with pytest.raises(ConfigError):
        parse_s_values("a")
    with pytest.raises(ConfigError, match="at least one"):
        parse_s_values(" , ")


def test_parse_range():
    assert ConfigManager.parse_range("-4..4") == (-4, 4)
    assert ConfigManager.parse_range(" 0..2 ") == (0, 2)
    with pytest.raises(ValueError, match="A..B"):
        ConfigManager.parse_range("4")
    with pytest.raises(ValueError, match="integers"):
        ConfigManager.parse_range("a..b")


def test_defaults():
    config = RunConfig.from_env()
    assert config.s_values == (2,)
    assert config.q_value is None
    assert config.window == (-4, 4)
    assert config.output_format == "plain"
    assert config.suites == SUITES
    assert config.qmode == "formal"


def test_from_env(monkeypatch):
    monkeypatch.setenv("QWITT_S", "3,-1")
    monkeypatch.setenv("QWITT_Q", "1/2")
    monkeypatch.setenv("QWITT_WINDOW", "-2..5")
    monkeypatch.setenv("QWITT_SEED", "7")
    monkeypatch.setenv("QWITT_FORMAT", "json")
    monkeypatch.setenv("QWITT_LOG_LEVEL", "debug")
    config = RunConfig.from_env()
    assert config.s_values == (3, -1)
    assert config.q_value == Fraction(1, 2)
    assert config.window == (-2, 5)
    assert config.seed == 7
    assert config.output_format == "json"
    assert config.log_level == "DEBUG"
    assert config.qmode == "1/2"


@pytest.mark.parametrize(
    "key, value",
    [
        ("QWITT_SAMPLES", "many"),
        ("QWITT_WINDOW", "3..1"),
        ("QWITT_FORMAT", "xml"),
        ("QWITT_LOG_LEVEL", "LOUD"),
    ],
)
def test_invalid_environment(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        RunConfig.from_env()


def test_overrides():
    config = RunConfig().with_overrides(s_values=(4,), window=None, samples=3)
    assert config.s_values == (4,)
    assert config.window == (-4, 4)
    assert config.samples == 3
    with pytest.raises(ConfigError, match="unknown suite"):
        RunConfig().with_overrides(suites=("twist", "nope"))
    with pytest.raises(ConfigError, match="nonnegative"):
        RunConfig().with_overrides(check_window=-1)


def test_q_restrictions():
    with pytest.raises(NonzeroQError):
        RunConfig().with_overrides(q_value=Fraction(0))
    with pytest.raises(SigmaIsIdentityError):
        RunConfig().with_overrides(s_values=(2, 1), q_value=Fraction(1))
    assert RunConfig().with_overrides(s_values=(2,), q_value=Fraction(1)).qmode == "1"


def test_reload_config(monkeypatch):
    monkeypatch.setenv("QWITT_S", "5")
    assert RunConfig.reload_config().s_values == (5,)
    monkeypatch.setenv("QWITT_S", "6")
    assert RunConfig.get_config().s_values == (5,)
    assert RunConfig.reload_config().s_values == (6,)
