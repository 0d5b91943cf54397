"""Named graphs used throughout the package.

Cubic graphs with a known LCF code are generated on demand.  The rest ship
as edge-list files under ``data/``.  Every graph is checked against its
recorded order, size, degree and girth when loaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import Graph, GraphError, from_lcf, generalized_petersen, parse_edge_list


@dataclass(frozen=True)
class Entry:
    order: int
    size: int
    degree: int
    girth: int
    lcf: tuple[tuple[int, ...], int] | None = None
    petersen: tuple[int, int] | None = None
    note: str = ""


CATALOG: dict[str, Entry] = {
    "nauru": Entry(24, 36, 3, 6, lcf=((5, -9, 7, -7, 9, -5), 4)),
    "mcgee": Entry(24, 36, 3, 7, lcf=((12, 7, -7), 8)),
    "frucht": Entry(12, 18, 3, 3, lcf=((-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2), 1)),
    "pappus": Entry(18, 27, 3, 6, lcf=((5, 7, -7, 7, -7, -5), 3)),
    "dyck": Entry(32, 48, 3, 6, lcf=((5, -5, 13, -13), 8)),
    "truncated-tetrahedral": Entry(12, 18, 3, 3, lcf=((2, 6, -2), 4)),
    "gp-12-4": Entry(24, 36, 3, 3, petersen=(12, 4)),
    "petersen": Entry(10, 15, 3, 5, petersen=(5, 2)),
    "sylvester": Entry(36, 90, 5, 5),
    "wong": Entry(30, 75, 5, 5),
    "meringer": Entry(30, 75, 5, 5),
    "robertson": Entry(19, 38, 4, 5, note="the (4,5)-cage has 19 vertices"),
    "gewirtz": Entry(56, 280, 10, 4),
    "gosset": Entry(56, 756, 27, 3),
    "icosidodecahedral": Entry(30, 60, 4, 3),
    "24-cell": Entry(24, 96, 8, 3),
}


def names() -> list[str]:
    return list(CATALOG)


def _load_file(name: str) -> Graph:
    text = resources.files("graphdesigns").joinpath("data", f"{name}.edges").read_text(encoding="utf-8")
    return parse_edge_list(text, name=name)


@lru_cache(maxsize=None)
def catalog_get(name: str) -> Graph:
    """Return the catalog graph ``name``, validated against its invariants."""
    key = name.strip().lower()
    if key not in CATALOG:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(CATALOG)}")
    entry = CATALOG[key]
    if entry.lcf is not None:
        g = from_lcf(entry.lcf[0], entry.lcf[1], name=key)
    elif entry.petersen is not None:
        g = generalized_petersen(*entry.petersen)
        g = Graph(g.n, g.adjacency, name=key)
    else:
        g = _load_file(key)
    degrees = set(g.degrees.tolist())
    found = (g.n, g.edge_count, degrees, g.girth())
    if found != (entry.order, entry.size, {entry.degree}, entry.girth):
        raise GraphError(f"catalog graph {key!r} failed validation: "
                         f"got (n, m, degrees, girth) = {found}")
    return g


def describe(name: str) -> dict:
    g = catalog_get(name)
    e = CATALOG[name]
    return {"name": name, "order": g.n, "size": g.edge_count, "degree": e.degree,
            "girth": e.girth, "diameter": g.diameter(),
            "source": "lcf" if e.lcf else "petersen" if e.petersen else "data file"}
