import pytest

from errors import DomainError
from models.braid_models import BraidWord
from services.diagram_service import braid_paths, draw


def test_summary(tmp_path):
    out = tmp_path / "kink.svg"
    assert draw(BraidWord.from_ints(2, [1]), str(out)) == {"crossings": 1, "closure_arcs": 2, "components": 1}
    assert out.read_text().lstrip().startswith("<?xml")
    summary = draw(BraidWord.identity(3), str(tmp_path / "unlink.svg"))
    assert summary["components"] == 3


def test_paths_break_the_under_strand():
    paths = braid_paths(BraidWord.from_ints(3, [1, -2]))
    # per row: one straight strand, two under halves and the over strand; then three closure arcs
    assert len(paths) == 11
    components = {component for component, _ in paths}
    assert components == {0}


def test_output_is_deterministic(tmp_path):
    b = BraidWord.from_ints(3, [1, -2, 1, -2])
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    draw(b, str(first))
    draw(b, str(second))
    assert first.read_bytes() == second.read_bytes()


def test_creates_missing_directories(tmp_path):
    out = tmp_path / "nested" / "dir" / "braid.svg"
    draw(BraidWord.from_ints(2, [1, 1]), str(out))
    assert out.exists()


def test_unwritable_destination(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    with pytest.raises(DomainError):
        draw(BraidWord.from_ints(2, [1]), str(blocker / "braid.svg"))
