"""
Point-file reading and writing.

Two formats are accepted:
- plain text, one point per line as "x y" (base-10 integers), '#' starts a comment;
- JSON, {"points": [[x, y], ...]}.
"""

import json
from pathlib import Path
from typing import Union

from loguru import logger

from ..errors import InvalidFormatError
from .pointset import PointSet, assert_general_position
from .predicates import Point


def parse_points(text: str) -> PointSet:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(stripped)
            raw = payload["points"]
            points = [Point(int(x), int(y)) for x, y in raw]
        except (ValueError, KeyError, TypeError) as e:
            logger.error(f"Invalid JSON point file: {e}")
            raise InvalidFormatError(f"invalid JSON point file: {e}") from e
        return assert_general_position(points)

    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            logger.error(f"Line {lineno}: expected 'x y', got {line!r}")
            raise InvalidFormatError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            points.append(Point(int(fields[0], 10), int(fields[1], 10)))
        except ValueError as e:
            raise InvalidFormatError(f"line {lineno}: {e}") from e
    return assert_general_position(points)


def read_points(path: Union[str, Path]) -> PointSet:
    logger.debug(f"Reading points from {path}")
    return parse_points(Path(path).read_text())


def format_points(ps: PointSet, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"points": [[p.x, p.y] for p in ps.points]})
    return "".join(f"{p.x} {p.y}\n" for p in ps.points)


def write_points(ps: PointSet, path: Union[str, Path], fmt: str = "text") -> None:
    Path(path).write_text(format_points(ps, fmt))
