"""Seeded instance generators: G(n,p), uniform random trees, random path forests, gadgets.

Specs are written like function calls, e.g. ``gnp(1000, 0.01)``, ``random-tree(12)``,
``paths(5, 3, 9)``, ``gadget(4)``.
"""

from __future__ import annotations

import heapq
import math
import random
import re
from dataclasses import dataclass

import numpy as np

from .graph import Graph, PathForest, expand_forest

_MASK64 = (1 << 64) - 1
_SPEC_RE = re.compile(r"^\s*([a-z-]+)\s*\((.*)\)\s*$")


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str
    args: tuple

    def __str__(self):
        return f"{self.kind}({', '.join(str(a) for a in self.args)})"


def parse_spec(text: str) -> GenSpec:
    mt = _SPEC_RE.match(text)
    if not mt:
        raise GeneratorError(f"cannot parse generator spec {text!r}")
    kind, body = mt.group(1), mt.group(2)
    args = []
    for tok in filter(None, (t.strip() for t in body.split(","))):
        try:
            args.append(int(tok))
        except ValueError:
            try:
                args.append(float(tok))
            except ValueError:
                raise GeneratorError(f"bad argument {tok!r} in {text!r}") from None
    return GenSpec(kind, tuple(args))


def _arity(spec: GenSpec, k: int):
    if len(spec.args) != k:
        raise GeneratorError(f"{spec.kind} takes {k} argument(s), got {len(spec.args)}")


def gen_instance(spec: GenSpec | str, seed: int = 0) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    seed &= _MASK64
    if spec.kind == "gnp":
        _arity(spec, 2)
        return gnp(int(spec.args[0]), float(spec.args[1]), seed)
    if spec.kind == "random-tree":
        _arity(spec, 1)
        return random_tree(int(spec.args[0]), seed)
    if spec.kind == "paths":
        _arity(spec, 3)
        return expand_forest(random_forest(*(int(a) for a in spec.args), seed=seed))
    if spec.kind == "gadget":
        _arity(spec, 1)
        return gadget(int(spec.args[0]))
    if spec.kind == "tight":
        _arity(spec, 1)
        return tight_gadget(int(spec.args[0]))
    raise GeneratorError(f"unknown generator {spec.kind!r}")


def _pair_from_index(idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Linear index over pairs (u, v), v < u, ordered by u then v.
    u = np.floor((1 + np.sqrt(1 + 8 * idx.astype(np.float64))) / 2).astype(np.int64)
    # float rounding can land one off either way
    u -= (u * (u - 1) // 2) > idx
    u += ((u + 1) * u // 2) <= idx
    v = idx - u * (u - 1) // 2
    return u, v


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) via geometric skipping over the pair index space."""
    if n < 0:
        raise GeneratorError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise GeneratorError("p must lie in [0, 1]")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return Graph.from_edges(n, [])
    rng = np.random.default_rng(seed)
    chunks = []
    pos = -1
    expected = total * p
    batch = int(expected + 6 * math.sqrt(expected) + 16)
    while True:
        gaps = rng.geometric(p, size=batch).astype(np.int64)
        idx = pos + np.cumsum(gaps)
        keep = idx[idx < total]
        chunks.append(keep)
        if len(keep) < len(idx):
            break
        pos = int(idx[-1])
    idx = np.concatenate(chunks)
    u, v = _pair_from_index(idx)
    return graph_from_arrays(n, u, v)


def graph_from_arrays(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    """Fast construction from distinct undirected edges given as index arrays."""
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=n)
    bounds = np.concatenate([[0], np.cumsum(counts)])
    flat = dst.tolist()
    adj = tuple(tuple(flat[bounds[i]:bounds[i + 1]]) for i in range(n))
    return Graph(n, adj)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree on ``n`` vertices (Pruefer decoding)."""
    if n < 1:
        raise GeneratorError("a tree needs at least one vertex")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_forest(b: int, min_len: int, max_len: int, seed: int = 0) -> PathForest:
    if b < 1 or min_len < 1 or max_len < min_len:
        raise GeneratorError("need b >= 1 and 1 <= min_len <= max_len")
    rng = random.Random(seed)
    return PathForest.of(rng.randint(min_len, max_len) for _ in range(b))


def _spider_with_tail(k: int, spoke: int, tail: int) -> Graph:
    edges = []
    for i in range(k):
        prev = 0
        for step in range(1, spoke + 1):
            v = 1 + i * spoke + (step - 1)
            edges.append((prev, v))
            prev = v
    last_tip = k * spoke
    nxt = k * spoke + 1
    prev = last_tip
    for _ in range(tail):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return Graph.from_edges(nxt, edges)


def gadget(k: int) -> Graph:
    """Hub 0 with ``k`` spokes of length ``k`` and a ``2k-2`` edge tail off the last tip.

    Tips are pairwise ``2k`` apart; see :func:`gadget_landmarks` for named vertices.
    """
    if k < 2:
        raise GeneratorError("gadget needs k >= 2")
    return _spider_with_tail(k, k, 2 * k - 2)


def tight_gadget(k: int) -> Graph:
    """Variant with spokes of length ``k+1`` and a ``2k`` edge tail.

    Greedy center selection in tip-first order picks all ``k`` tips at guess
    ``k+1`` and finishes in ``3k`` rounds, against ``k+2`` for hub-first burning.
    """
    if k < 2:
        raise GeneratorError("tight gadget needs k >= 2")
    return _spider_with_tail(k, k + 1, 2 * k)


def gadget_landmarks(k: int, spoke: int | None = None, tail: int | None = None) -> dict:
    spoke = k if spoke is None else spoke
    tail = 2 * k - 2 if tail is None else tail
    tips = [(i + 1) * spoke for i in range(k)]
    tail_vertices = [tips[-1]] + [k * spoke + 1 + j for j in range(tail)]
    return {
        "hub": 0,
        "tips": tips,
        "end": tail_vertices[-1],
        "tail": tail_vertices,
        "tail_middle": tail_vertices[tail // 2],
    }
