"""2-approximation for trees via deepest-vertex ancestor centers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .approx import ApproxResult, find_min_accepting
from .graph import Graph, components
from .schedule import canonicalize, simulate


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: int
    parent: tuple[int, ...]  # -1 at the root
    level: tuple[int, ...]
    by_depth: tuple[int, ...]  # vertices by level descending, then index


@dataclass(frozen=True)
class TreeGuessResult:
    guess: int
    accepted: bool
    centers: tuple[int, ...]
    transcript: tuple[tuple[int, int], ...]  # (deepest unmarked vertex, chosen center)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(components(g)) == 1


def root_tree(g: Graph, root: int = 0) -> RootedTree:
    if not is_tree(g):
        raise NotATreeError("not a tree")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    parent = [-1] * g.n
    level = [0] * g.n
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                level[w] = level[u] + 1
                queue.append(w)
    by_depth = sorted(range(g.n), key=lambda v: (-level[v], v))
    return RootedTree(g, root, tuple(parent), tuple(level), tuple(by_depth))


def ancestor(t: RootedTree, v: int, k: int) -> int:
    for _ in range(k):
        v = t.parent[v]
    return v


def burn_guess_tree(t: RootedTree, guess: int) -> TreeGuessResult:
    if guess < 1:
        raise ValueError("guess must be positive")
    adj = t.graph.adj
    marked = [False] * t.graph.n
    centers: list[int] = []
    transcript: list[tuple[int, int]] = []
    ptr = 0
    order = t.by_depth
    while True:
        while ptr < len(order) and marked[order[ptr]]:
            ptr += 1
        if ptr == len(order):
            return TreeGuessResult(guess, True, tuple(centers), tuple(transcript))
        if len(centers) == guess:
            return TreeGuessResult(guess, False, tuple(centers), tuple(transcript))
        v = order[ptr]
        c = ancestor(t, v, guess) if t.level[v] >= guess else t.root
        centers.append(c)
        transcript.append((v, c))
        # mark the radius-``guess`` ball around c
        marked[c] = True
        seen = {c}
        frontier = [c]
        for _ in range(guess):
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        marked[w] = True
                        nxt.append(w)
            frontier = nxt


def approx2(g: Graph, root: int | None = None, search_mode: str = "binary") -> ApproxResult:
    """Schedule within 2x the burning number of a tree; lower bound is the accepting guess."""
    t = root_tree(g, 0 if root is None else root)
    g_star, cache = find_min_accepting(lambda x: burn_guess_tree(t, x), 1, g.n, search_mode)
    res = cache[g_star]
    schedule = canonicalize(g, res.centers)
    rounds = simulate(g, schedule).completion_round
    return ApproxResult(
        "tree2",
        schedule,
        rounds,
        g_star,
        Fraction(2),
        guess=g_star,
        counters={"guess_calls": len(cache)},
        info={"root": t.root, "centers": res.centers},
    )
