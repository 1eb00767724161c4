import json

import pytest

from geogrundy.conflict import Criterion
from geogrundy.constructions import triangle_coloring
from geogrundy.designs import hanani_decompose
from geogrundy.exceptions import InputError
from geogrundy.geometry import gen_general
from geogrundy.schemas import DecompositionFile
from geogrundy.utils import (
    format_point_file,
    parse_point_file,
    read_coloring_file,
    read_point_file,
    write_coloring_file,
    write_decomposition_file,
    write_point_file,
    write_text,
)


def test_point_file_format():
    s = gen_general(4, 1)
    text = format_point_file(s)
    assert text.splitlines()[0] == "4"
    assert text.endswith("\n")
    assert parse_point_file(text) == s


def test_trailing_blank_lines_are_ignored():
    assert len(parse_point_file("3\n0 0\n4 0\n0 4\n\n\n")) == 3


@pytest.mark.parametrize(
    "text,message",
    [
        ("", "empty"),
        ("x\n", "point count"),
        ("2\n0 0\n", "declares 2 points"),
        ("3\n0 0\n1 2 3\n0 4\n", "expected two integers"),
        ("3\n0 0\n1.5 2\n0 4\n", "decimal integers"),
        ("3\n0 0\n1 1\n2 2\n", "collinear"),
    ],
)
def test_malformed_point_files(text, message):
    with pytest.raises(InputError, match=message):
        parse_point_file(text)


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        read_point_file(tmp_path / "absent.txt")


def test_point_file_on_disk(tmp_path):
    s = gen_general(12, 6)
    path = tmp_path / "points.txt"
    write_point_file(path, s)
    assert read_point_file(path) == s
    assert b"\r" not in path.read_bytes()


def test_coloring_file_on_disk(tmp_path):
    coloring = triangle_coloring(gen_general(7, 1))
    path = tmp_path / "coloring.json"
    write_coloring_file(path, coloring)

    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["criterion"] == "noncrossing"
    assert len(data["assignments"]) == 21

    restored = read_coloring_file(path)
    assert restored.colors == coloring.colors
    assert restored.criterion == Criterion.NONCROSSING


def test_duplicate_edge_in_coloring_file(tmp_path):
    path = tmp_path / "coloring.json"
    path.write_text(json.dumps({
        "n": 3,
        "criterion": "crossing",
        "assignments": [
            {"edge": [0, 1], "color": 1},
            {"edge": [1, 0], "color": 2},
        ],
    }), encoding="utf-8")
    with pytest.raises(InputError, match="assigned twice"):
        read_coloring_file(path)


@pytest.mark.parametrize(
    "assignment",
    [{"edge": [0, 3], "color": 1}, {"edge": [1, 1], "color": 1}, {"edge": [0, 1], "color": 0}],
)
def test_invalid_assignments(tmp_path, assignment):
    path = tmp_path / "coloring.json"
    path.write_text(json.dumps({"n": 3, "criterion": "crossing", "assignments": [assignment]}), encoding="utf-8")
    with pytest.raises(InputError):
        read_coloring_file(path)


def test_decomposition_file():
    d = hanani_decompose(10)
    restored = DecompositionFile.model_validate_json(
        DecompositionFile.from_decomposition(d).model_dump_json()
    ).to_decomposition()
    assert restored == d


def test_decomposition_file_on_disk(tmp_path):
    d = hanani_decompose(11)
    path = tmp_path / "decomposition.json"
    write_decomposition_file(path, d)
    text = path.read_text(encoding="utf-8")
    assert json.loads(text)["kind"] == "four_cycle"
    assert DecompositionFile.model_validate_json(text).to_decomposition() == d


def test_point_file_that_is_not_utf8(tmp_path):
    path = tmp_path / "points.txt"
    path.write_bytes(b"3\n0 0\n1 \xff\n0 4\n")
    with pytest.raises(InputError, match="UTF-8"):
        read_point_file(path)


def test_write_into_missing_directory(tmp_path):
    with pytest.raises(InputError, match="cannot write"):
        write_text(tmp_path / "nodir" / "out.txt", "x\n")
