import os

from genstirling.env import Settings, load_dotenv, load_settings


def test_defaults():
    assert load_settings() == Settings()


def test_dotenv_and_overrides(tmp_path, monkeypatch):
    monkeypatch.setattr(os, "environ", os.environ.copy())
    (tmp_path / ".env").write_text(
        "# limits\nGENSTIRLING_ORACLE_CAP=5\nGENSTIRLING_THREADS='4'\nGENSTIRLING_MAX_POLY_N=12\nnot a pair\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("GENSTIRLING_MAX_POLY_N", "20")
    loaded = load_dotenv(str(tmp_path / ".env"))
    assert loaded["GENSTIRLING_ORACLE_CAP"] == "5"
    settings = load_settings()
    assert settings.oracle_cap == 5
    assert settings.threads == 4
    # variables already in the environment win over .env
    assert settings.max_poly_n == 20


def test_bad_values_fall_back(monkeypatch):
    monkeypatch.setenv("GENSTIRLING_MAX_NUMERIC_N", "lots")
    monkeypatch.setenv("GENSTIRLING_THREADS", "0")
    monkeypatch.setenv("GENSTIRLING_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.max_numeric_n == 200
    assert settings.threads == 1
    assert settings.log_level == "DEBUG"


def test_missing_dotenv(tmp_path):
    assert load_dotenv(str(tmp_path / "absent.env")) == {}
