import json

import pytest
from click.testing import CliRunner

from frameworks import config

LINE_PLUS_POINT = {
    "ground": 4,
    "flats": [[], [1], [2], [3], [4], [1, 2, 3], [1, 4], [2, 4], [3, 4], [1, 2, 3, 4]],
}

U23 = {"ground": 3, "flats": [[], [1], [2], [3], [1, 2, 3]]}


@pytest.fixture(autouse=True)
def reset_guard_override():
    """--max-n-guard is process-wide; never let one test leak it into the next."""
    config.set_max_n_override(None)
    yield
    config.set_max_n_override(None)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write_flats(tmp_path):
    def _write(payload, name="flats.json"):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write
