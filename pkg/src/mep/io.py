"""JSON (de)serialisation for instances and solutions."""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Union

from .errors import InstanceFormatError
from .geometry import AxisRect, ConvexPolygon, Disk, Point2D, Range, validate
from .instance import RangeSpace
from .solution import Solution

PathLike = Union[str, Path]

_FIELDS = {
    "rect": ("xmin", "ymin", "xmax", "ymax"),
    "disk": ("cx", "cy", "r"),
}


def _finite(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise InstanceFormatError(f"{where}: expected a finite number, got {value!r}")
    return float(value)


def _number(obj: dict, key: str, where: str) -> float:
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{where}: expected an object")
    if key not in obj:
        raise InstanceFormatError(f"{where}: missing field '{key}'")
    return _finite(obj[key], f"{where}.{key}")


def _ordered(items: List[dict], kind: str) -> List[dict]:
    """Place items by their 'id' field if present, else by position."""
    if not all(isinstance(item, dict) for item in items):
        raise InstanceFormatError(f"{kind}: every entry must be an object")
    ids = [item.get("id", pos) for pos, item in enumerate(items)]
    if sorted(ids) != list(range(len(items))):
        raise InstanceFormatError(f"{kind}: ids must be unique and dense 0..{len(items) - 1}")
    out: List[Any] = [None] * len(items)
    for i, item in zip(ids, items):
        out[i] = item
    return out


def range_from_json(obj: dict, where: str) -> Range:
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{where}: expected an object")
    kind = obj.get("type")
    if kind in _FIELDS:
        args = [_number(obj, f, where) for f in _FIELDS[kind]]
        rng: Range = AxisRect(*args) if kind == "rect" else Disk(*args)
    elif kind == "polygon":
        verts = obj.get("vertices")
        if not isinstance(verts, list):
            raise InstanceFormatError(f"{where}.vertices: expected a list of [x, y]")
        pts = []
        for j, v in enumerate(verts):
            if not (isinstance(v, list) and len(v) == 2):
                raise InstanceFormatError(f"{where}.vertices[{j}]: expected [x, y]")
            pts.append(Point2D(*(_finite(c, f"{where}.vertices[{j}]") for c in v)))
        rng = ConvexPolygon(tuple(pts))
    else:
        raise InstanceFormatError(f"{where}.type: unknown range type {kind!r}")
    problem = validate(rng)
    if problem:
        raise InstanceFormatError(f"{where}: {problem}")
    return rng


def range_to_json(rng: Range, rid: int) -> Dict[str, Any]:
    if isinstance(rng, AxisRect):
        return {"id": rid, "type": "rect", "xmin": rng.xmin, "ymin": rng.ymin,
                "xmax": rng.xmax, "ymax": rng.ymax}
    if isinstance(rng, Disk):
        return {"id": rid, "type": "disk", "cx": rng.cx, "cy": rng.cy, "r": rng.r}
    return {"id": rid, "type": "polygon", "vertices": [[v.x, v.y] for v in rng.vertices]}


def space_from_json(data: Any) -> RangeSpace:
    if not isinstance(data, dict):
        raise InstanceFormatError("instance: expected a JSON object")
    raw_ranges = data.get("ranges", [])
    raw_points = data.get("points", [])
    if not isinstance(raw_ranges, list) or not isinstance(raw_points, list):
        raise InstanceFormatError("instance: 'ranges' and 'points' must be lists")
    ranges = [range_from_json(r, f"ranges[{i}]")
              for i, r in enumerate(_ordered(raw_ranges, "ranges"))]
    points = {}
    for i, p in enumerate(_ordered(raw_points, "points")):
        points[i] = Point2D(_number(p, "x", f"points[{i}]"), _number(p, "y", f"points[{i}]"))
    return RangeSpace(ranges, points)


def space_to_json(space: RangeSpace) -> dict:
    return {
        "ranges": [range_to_json(r, i) for i, r in enumerate(space.ranges)],
        "points": [{"id": pid, "x": p.x, "y": p.y} for pid, p in sorted(space.points.items())],
    }


def _read_json(path: PathLike) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def load_space(path: PathLike) -> RangeSpace:
    data = _read_json(path)
    try:
        return space_from_json(data)
    except InstanceFormatError as exc:
        raise InstanceFormatError(f"{path}: {exc}") from None


def dump_space(space: RangeSpace) -> str:
    return json.dumps(space_to_json(space), indent=1)


def save_space(space: RangeSpace, path: PathLike) -> None:
    Path(path).write_text(dump_space(space) + "\n")


def load_solution(path: PathLike) -> Solution:
    data = _read_json(path)
    try:
        return Solution.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"{path}: malformed solution ({exc})") from None


def dump_solution(sol: Solution) -> str:
    return json.dumps(sol.to_json())
