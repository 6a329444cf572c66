from pathlib import Path

import pytest

GOLDEN = Path(__file__).resolve().parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False, help="Rewrite files under tests/golden.")


@pytest.fixture
def golden(request):
    """Compare bytes against tests/golden/<name>; a missing file is recorded and the test skipped."""
    update = request.config.getoption("--update-golden")

    def check(name: str, actual: bytes) -> None:
        path = GOLDEN / name
        if update or not path.exists():
            path.write_bytes(actual)
            if not update:
                pytest.skip(f"recorded new golden file {name}")
            return
        assert actual == path.read_bytes(), f"output differs from tests/golden/{name}"

    return check
