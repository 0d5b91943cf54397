"""Simple undirected graphs, text formats and hop distances.

Vertices are always ``0 .. n-1``.  A :class:`Graph` is immutable once built
and is validated on construction (simple, symmetric, connected unless the
caller explicitly allows otherwise).
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Use the ``from_*`` constructors rather than building this directly.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} are not strictly increasing")
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge ({v}, {u}) is not symmetric")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.edge_count})"

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    @cached_property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Both orientations of every edge as an ``(2m, 2)`` array."""
        e = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        return np.concatenate([e, e[:, ::-1]])

    def is_regular(self) -> bool:
        return bool(np.all(self.degrees == self.degrees[0]))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        e = self.edge_array
        a[e[:, 0], e[:, 1]] = 1.0
        return a

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances (``-1`` between components)."""
        return np.array([distances_from(self, [v]) for v in range(self.n)], dtype=np.int64)

    def is_connected(self) -> bool:
        return bool(np.all(distances_from(self, [0]) >= 0))

    def diameter(self) -> int:
        return int(self.distance_matrix.max())

    def girth(self) -> int | None:
        return girth(self)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges],
                              allow_disconnected=True, name=self.name)


def check_subset(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    """Validate a vertex subset and return it sorted."""
    s = [int(v) for v in members]
    if not s:
        raise GraphError("vertex subset must be non-empty")
    if len(set(s)) != len(s):
        raise GraphError("vertex subset contains duplicates")
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return tuple(sorted(s))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], *,
                   allow_disconnected: bool = False, name: str = "") -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an index outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    g = Graph(n, tuple(tuple(sorted(a)) for a in nbrs), name=name)
    if not allow_disconnected and not g.is_connected():
        raise GraphError("graph is disconnected")
    return g


def from_lcf(code: Sequence[int], repeats: int = 1, *, name: str = "") -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``[code]^repeats``."""
    n = len(code) * repeats
    if n < 4 or n % 2:
        raise GraphError("LCF graphs need an even number of at least 4 vertices")
    cycle = {frozenset((i, (i + 1) % n)) for i in range(n)}
    chords = set()
    for i in range(n):
        j = (i + code[i % len(code)]) % n
        e = frozenset((i, j))
        if len(e) < 2 or e in cycle:
            raise GraphError(f"chord from {i} with offset {code[i % len(code)]} "
                             "collides with the Hamiltonian cycle")
        chords.add(e)
    g = from_edge_list(n, [tuple(e) for e in cycle | chords], name=name)
    if not np.all(g.degrees == 3):
        raise GraphError("LCF code is inconsistent: result is not 3-regular")
    return g


_LCF_RE = re.compile(r"^\s*\[([^\]]*)\]\s*(?:\^\s*(\d+))?\s*$")


def parse_lcf(text: str) -> tuple[list[int], int]:
    """Parse ``"[5,-9,7,-7,9,-5]^4"`` into ``([5, -9, 7, -7, 9, -5], 4)``."""
    m = _LCF_RE.match(text)
    if not m:
        raise GraphError(f"cannot parse LCF string {text!r}")
    try:
        code = [int(t) for t in m.group(1).replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise GraphError(f"cannot parse LCF string {text!r}") from exc
    if not code:
        raise GraphError("empty LCF code")
    return code, int(m.group(2) or 1)


def generalized_petersen(m: int, k: int) -> Graph:
    """GP(m, k): outer m-cycle, inner star polygon with step k, and spokes.

    Outer vertices are ``0..m-1`` and inner vertices ``m..2m-1``.
    """
    if m < 3 or not 1 <= k < m / 2:
        raise GraphError(f"need m >= 3 and 1 <= k < m/2, got ({m}, {k})")
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((i, m + i))
        edges.append((m + i, m + (i + k) % m))
    return from_edge_list(2 * m, edges, name=f"gp-{m}-{k}")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no ``>>graph6<<`` header)."""
    bits = []
    adj = g.adjacency
    for j in range(1, g.n):
        row = set(adj[j])
        bits.extend(1 if i in row else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)]
    return _encode_n(g.n) + "".join(chars)


def from_graph6(text: str, *, allow_disconnected: bool = False, name: str = "") -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError("graph6 contains characters outside the printable range")
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise GraphError("malformed graph6 header")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)}")
    bits = [(d >> s) & 1 for d in body for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges, allow_disconnected=allow_disconnected, name=name)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, *, allow_disconnected: bool = False, name: str = "") -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format (``#`` comments)."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError("edge list entries must be integer pairs") from exc
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    g = from_edge_list(n, edges, allow_disconnected=allow_disconnected, name=name)
    if g.edge_count != m:
        raise GraphError("edge list contains duplicate edges")
    return g


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in (comment.splitlines() if comment else [])]
    lines.append(f"{g.n} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path, **kwargs) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"), **kwargs)


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def distances_from(g: Graph, sources: Iterable[int]) -> np.ndarray:
    """Multi-source BFS: hop distance from every vertex to the nearest source.

    Unreachable vertices get ``-1``.
    """
    dist = np.full(g.n, -1, dtype=np.int64)
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    if not queue:
        raise GraphError("distances need at least one source")
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def pairwise_distance_sum(g: Graph, members: Sequence[int]) -> int:
    """Sum of d(v_i, v_j) over all ordered pairs of members."""
    idx = np.asarray(members, dtype=np.int64)
    return int(g.distance_matrix[np.ix_(idx, idx)].sum())


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, ``None`` for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best
