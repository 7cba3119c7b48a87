import pytest

from eo_strata.catalog.golden import golden_rows
from eo_strata.strata.core import FinalType, YoungType

GOLDEN_ROWS = golden_rows()


def nu(*values) -> FinalType:
    return FinalType.of(values)


def mu(g, *parts) -> YoungType:
    return YoungType(g, parts)


@pytest.fixture(params=GOLDEN_ROWS, ids=str)
def golden_row(request):
    return request.param


@pytest.fixture
def app_dirs(tmp_path, monkeypatch):
    """keep log files and config overrides of CLI runs inside the test directory"""
    monkeypatch.setenv("XDG_DATA_HOME", str(tmp_path / "data"))
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    return tmp_path
