# Ensure 'src' is on sys.path so tests can import 'genstirling'
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
src = ROOT / "src"
if str(src) not in sys.path:
    sys.path.insert(0, str(src))
# Also add project root to import top-level modules like 'tools'
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture(autouse=True)
def _clean_settings(monkeypatch, tmp_path):
    """No stray .env or GENSTIRLING_* variables leak into a test."""
    for name in ("GENSTIRLING_ORACLE_CAP", "GENSTIRLING_MAX_POLY_N", "GENSTIRLING_MAX_NUMERIC_N", "GENSTIRLING_THREADS", "GENSTIRLING_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture(scope="session")
def table13():
    from genstirling.stirling import build_table

    return build_table(13)


@pytest.fixture(scope="session")
def table25():
    from genstirling.stirling import build_table

    return build_table(25)
