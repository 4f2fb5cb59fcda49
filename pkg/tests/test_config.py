"""
Tests for environment-backed configuration.
"""

import pytest

from config import Config, SearchDefaults, ToleranceContext


def test_defaults(monkeypatch):
    for name in ("YBE_EPS_EQ", "YBE_FRS_SIZE_CAP", "YBE_SEARCH_RESTARTS", "YBE_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    cfg = Config()
    assert cfg.tolerances() == ToleranceContext()
    assert cfg.frs_size_cap == 10_000
    assert cfg.search_defaults() == SearchDefaults()
    assert cfg.validate()["valid"]


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("YBE_EPS_EQ", "1e-9")
    monkeypatch.setenv("YBE_SEARCH_RESTARTS", "5")
    cfg = Config()
    assert cfg.tolerances().eps_eq == pytest.approx(1e-9)
    assert cfg.search_defaults().restarts == 5


def test_unparseable_values_fall_back_and_are_reported(monkeypatch):
    monkeypatch.setenv("YBE_SEARCH_SEED", "forty-two")
    cfg = Config()
    assert cfg.search_seed == 42
    result = cfg.validate()
    assert not result["valid"]
    assert any("YBE_SEARCH_SEED" in issue for issue in result["issues"])


def test_non_positive_tolerance_is_an_issue(monkeypatch):
    monkeypatch.setenv("YBE_EPS_YBE", "0")
    cfg = Config()
    assert not cfg.validate()["valid"]
    assert cfg.tolerances() == ToleranceContext()


def test_unknown_log_level_warns(monkeypatch):
    monkeypatch.setenv("YBE_LOG_LEVEL", "chatty")
    assert any("YBE_LOG_LEVEL" in w for w in Config().validate()["warnings"])


def test_summary_mentions_tolerances():
    assert "eps_ybe" in Config().summary()
