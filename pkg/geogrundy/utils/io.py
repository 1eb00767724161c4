"""
Reading and writing the files the command line exchanges.

Every file is UTF-8 with LF line endings; JSON has sorted keys so identical
inputs give byte-identical outputs.
"""
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ValidationError

from ..constructions.greedy import EdgeColoring
from ..designs import Decomposition
from ..exceptions import InputError
from ..geometry import PointSet, make_point_set
from ..schemas import ColoringFile, DecompositionFile

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def format_point_file(s: PointSet) -> str:
    lines = [str(len(s))] + [f"{p.x} {p.y}" for p in s]
    return "\n".join(lines) + "\n"


def parse_point_file(text: str, convex: bool = False) -> PointSet:
    """First line n, then n lines of "x y" integers"""
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise InputError("point file is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError(f"point file must start with the point count, got {lines[0]!r}")
    if len(lines) - 1 != n:
        raise InputError(f"point file declares {n} points but lists {len(lines) - 1}")

    coords = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {number}: expected two integers, got {line!r}")
        try:
            coords.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f"line {number}: coordinates must be decimal integers, got {line!r}")
    return make_point_set(coords, convex=convex)


def write_text(path: PathLike, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror}")


def read_text(path: PathLike) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except UnicodeDecodeError:
        raise InputError(f"{path} is not valid UTF-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")


def read_point_file(path: PathLike, convex: bool = False) -> PointSet:
    return parse_point_file(read_text(path), convex=convex)


def write_point_file(path: PathLike, s: PointSet) -> None:
    write_text(path, format_point_file(s))


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def read_coloring_file(path: PathLike) -> EdgeColoring:
    try:
        return ColoringFile.model_validate_json(read_text(path)).to_coloring()
    except ValidationError as e:
        first = e.errors()[0]
        raise InputError(f"{path}: invalid coloring file: {first['msg']}")


def write_coloring_file(path: PathLike, col: EdgeColoring) -> None:
    write_text(path, dump_json(ColoringFile.from_coloring(col)))


def write_decomposition_file(path: PathLike, d: Decomposition) -> None:
    write_text(path, dump_json(DecompositionFile.from_decomposition(d)))
