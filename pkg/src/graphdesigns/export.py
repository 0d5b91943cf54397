"""Serialisation: deterministic JSON, DOT drawings and the shipped schemas."""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .graph import Graph


def jsonable(obj):
    """Recursively convert numpy scalars and arrays to plain Python."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps(obj) -> str:
    # sorted keys and fixed separators give byte-identical output across runs
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(obj, path: str | Path) -> None:
    text = dumps(obj)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def to_dot(g: Graph, marked=(), *, name: str | None = None) -> str:
    """Graphviz source with ``marked`` vertices drawn doubly circled."""
    marked = set(int(v) for v in marked)
    title = (name or g.name or "G").replace('"', "'")
    lines = [f'graph "{title}" {{', "  node [shape=circle, width=0.3, fontsize=9];"]
    for v in range(g.n):
        style = ", peripheries=2, style=bold" if v in marked else ""
        lines.append(f"  {v} [label={v}{style}];")
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, path: str | Path, marked=()) -> None:
    Path(path).write_text(to_dot(g, marked), encoding="utf-8")


def load_schema(name: str) -> dict:
    """Load ``schemas/<name>.schema.json`` shipped with the package."""
    text = resources.files("graphdesigns").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
