"""Undirected simple graphs, text formats, BFS and structural classification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

GENERAL = "general"
FOREST = "forest-of-trees"
TREE = "single-tree"
PATH_FOREST = "path-forest"


class GraphFormatError(ValueError):
    """Raised for malformed graph / path-forest text. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Unweighted undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Build instances with
    :meth:`from_edges`, which removes duplicates and rejects self-loops.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PathForest:
    """Disjoint union of paths, given by vertex counts in non-decreasing order."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if not self.lengths:
            raise ValueError("a path forest needs at least one path")
        if any(x < 1 for x in self.lengths):
            raise ValueError("path lengths must be positive")
        if list(self.lengths) != sorted(self.lengths):
            raise ValueError("path lengths must be sorted non-decreasing")

    @classmethod
    def of(cls, lengths: Iterable[int]) -> PathForest:
        return cls(tuple(sorted(lengths)))

    @property
    def b(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> int:
        return sum(self.lengths)

    def offsets(self) -> list[int]:
        """First vertex index of each path in :func:`expand_forest` layout."""
        out, acc = [], 0
        for x in self.lengths:
            out.append(acc)
            acc += x
        return out


@dataclass(frozen=True)
class GraphShape:
    kind: str
    component_count: int


def _lines(text: bytes | str):
    if isinstance(text, bytes):
        text = text.decode("ascii")
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", no) from None


def parse_graph(text: bytes | str) -> Graph:
    declared = None
    edges: set[tuple[int, int]] = set()
    first = True
    for no, line in _lines(text):
        toks = line.split()
        if first and toks[0] == "n":
            first = False
            if len(toks) != 2:
                raise GraphFormatError("header must be 'n <count>'", no)
            declared = _int(toks[1], no)
            if declared < 0:
                raise GraphFormatError("negative vertex count", no)
            continue
        first = False
        if len(toks) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", no)
        u, v = _int(toks[0], no), _int(toks[1], no)
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex index", no)
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"vertex index {max(u, v)} >= declared n={declared}", no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", no)
        edges.add((min(u, v), max(u, v)))
    if declared is None:
        declared = max((v for e in edges for v in e), default=-1) + 1
    return Graph.from_edges(declared, sorted(edges))


def parse_path_forest(text: bytes | str) -> PathForest:
    lines = list(_lines(text))
    if len(lines) != 1:
        raise GraphFormatError("expected exactly one 'paths n1 n2 ...' line", lines[1][0] if lines else None)
    no, line = lines[0]
    toks = line.split()
    if toks[0] != "paths":
        raise GraphFormatError("line must start with 'paths'", no)
    lengths = [_int(t, no) for t in toks[1:]]
    if not lengths:
        raise GraphFormatError("empty path list", no)
    if any(x <= 0 for x in lengths):
        raise GraphFormatError("path lengths must be positive", no)
    return PathForest.of(lengths)


def expand_forest(forest: PathForest) -> Graph:
    edges = []
    for start, length in zip(forest.offsets(), forest.lengths):
        edges.extend((start + i, start + i + 1) for i in range(length - 1))
    return Graph.from_edges(forest.total, edges)


def bfs_distances(g: Graph, source: int, depth_limit: int | None = None) -> dict[int, int]:
    """Hop distances from ``source``; vertices farther than ``depth_limit`` are omitted."""
    dist = {source: 0}
    frontier = [source]
    d = 0
    adj = g.adj
    while frontier and (depth_limit is None or d < depth_limit):
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs hop distances by repeated BFS (``inf`` when disconnected)."""
    inf = float("inf")
    out = []
    for s in range(g.n):
        row = [inf] * g.n
        for v, d in bfs_distances(g, s).items():
            row[v] = d
        out.append(row)
    return out


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def classify(g: Graph) -> GraphShape:
    """Most specific shape; a single path counts as a path forest."""
    c = len(components(g))
    if g.n == 0:
        return GraphShape(GENERAL, 0)
    acyclic = g.m == g.n - c
    if not acyclic:
        return GraphShape(GENERAL, c)
    if all(len(a) <= 2 for a in g.adj):
        return GraphShape(PATH_FOREST, c)
    if c == 1:
        return GraphShape(TREE, c)
    return GraphShape(FOREST, c)


def path_components(g: Graph) -> list[list[int]]:
    """Vertex sequences (endpoint to endpoint) of a path forest, shortest path first.

    Ties keep the order of their smallest vertex. Raises ``ValueError`` when
    ``g`` is not a path forest.
    """
    if classify(g).kind != PATH_FOREST:
        raise ValueError("graph is not a path forest")
    paths = []
    for comp in components(g):
        ends = sorted(v for v in comp if len(g.adj[v]) <= 1)
        start = ends[0]
        seq, prev = [start], -1
        while len(seq) < len(comp):
            cur = seq[-1]
            nxt = next(w for w in g.adj[cur] if w != prev)
            prev = cur
            seq.append(nxt)
        paths.append(seq)
    paths.sort(key=len)
    return paths


def as_path_forest(g: Graph) -> tuple[PathForest, list[int]]:
    """Path forest of ``g`` plus the map from expanded-layout index to vertex of ``g``."""
    paths = path_components(g)
    mapping = [v for p in paths for v in p]
    return PathForest(tuple(len(p) for p in paths)), mapping


def relabel(order: Sequence[int], mapping: Sequence[int]) -> list[int]:
    return [mapping[v] for v in order]
