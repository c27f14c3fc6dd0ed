"""Guess-and-check 3-approximation for arbitrary graphs.

For a guess ``g``, vertices are scanned in a fixed order; a vertex farther
than ``2g-2`` from every chosen center becomes a new center. Reaching ``g``
centers means the guess was too small: the centers are pairwise at distance
``>= 2g-1``, which certifies that no schedule finishes in fewer than ``g``
rounds. Otherwise lighting the ``<= g-1`` centers in order burns everything
by round ``3g-3``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .graph import Graph
from .schedule import BurningSchedule, DistanceCertificate, simulate


@dataclass(frozen=True)
class GuessResult:
    guess: int
    centers: tuple[int, ...]
    certificate: DistanceCertificate | None
    traversals: int = 0

    @property
    def accepted(self) -> bool:
        return self.certificate is None


@dataclass
class ApproxResult:
    algorithm: str
    schedule: BurningSchedule
    rounds: int
    opt_lower_bound: int | None
    ratio_bound: Fraction
    guess: int | None = None
    certificate: DistanceCertificate | None = None
    counters: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)


def vertex_order(n: int, seed: int | None = None) -> list[int]:
    """Ascending order, or a seeded shuffle when ``seed`` is given."""
    order = list(range(n))
    if seed is not None:
        random.Random(seed).shuffle(order)
    return order


def burn_guess(g: Graph, guess: int, order: Sequence[int] | None = None) -> GuessResult:
    if guess < 1:
        raise ValueError("guess must be positive")
    n = g.n
    if order is None:
        order = range(n)
    elif len(order) != n or set(order) != set(range(n)):
        raise ValueError("order must be a permutation of the vertices")
    adj = g.adj
    limit = 2 * guess - 2
    far = limit + 1
    dist = [far] * n  # distance to nearest center, capped at ``far``
    centers: list[int] = []
    traversals = 0
    for v in order:
        if dist[v] <= limit:
            continue
        centers.append(v)
        if len(centers) == guess:
            return GuessResult(guess, tuple(centers), DistanceCertificate(guess, tuple(centers)), traversals)
        # Truncated BFS that only expands through improved vertices: a vertex
        # already at least as close to an older center shields everything behind it.
        dist[v] = 0
        frontier = [v]
        d = 0
        while frontier and d < limit:
            d += 1
            nxt = []
            for u in frontier:
                nb = adj[u]
                traversals += len(nb)
                for w in nb:
                    if dist[w] > d:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
    return GuessResult(guess, tuple(centers), None, traversals)


def find_min_accepting(probe: Callable[[int], object], lo: int, hi: int, mode: str = "binary"):
    """Smallest ``g`` in ``[lo, hi]`` with ``probe(g).accepted``, plus the probe cache.

    ``hi`` must accept. Binary mode gallops up from ``lo`` and bisects, then
    confirms that ``g`` accepts and ``g-1`` rejects; any inconsistency falls
    back to a linear scan, which makes the boundary unconditional.
    """
    if mode not in ("binary", "linear"):
        raise ValueError(f"unknown search mode {mode!r}")
    cache: dict[int, object] = {}

    def run(x):
        if x not in cache:
            cache[x] = probe(x)
        return cache[x]

    def linear():
        x = lo
        while not run(x).accepted:
            x += 1
        return x

    if mode == "linear":
        return linear(), cache

    bad, step, x = lo - 1, 1, lo
    while True:
        x = min(x, hi)
        if run(x).accepted:
            good = x
            break
        bad = x
        if x == hi:
            return linear(), cache
        x = bad + step
        step *= 2
    while good - bad > 1:
        mid = (good + bad) // 2
        if run(mid).accepted:
            good = mid
        else:
            bad = mid
    if not run(good).accepted or (good > lo and run(good - 1).accepted):
        return linear(), cache
    return good, cache


def approx3(
    g: Graph, search_mode: str = "binary", order: Sequence[int] | None = None
) -> ApproxResult:
    """Schedule within 3x the burning number, with a certified lower bound."""
    if g.n == 0:
        return ApproxResult("greedy3", BurningSchedule(()), 0, 0, Fraction(3), guess=1)
    if order is None:
        order = list(range(g.n))
    g_star, cache = find_min_accepting(lambda x: burn_guess(g, x, order), 1, g.n + 1, search_mode)
    res = cache[g_star]
    schedule = BurningSchedule(res.centers)
    rounds = simulate(g, schedule).completion_round
    cert = cache[g_star - 1].certificate if g_star > 1 else None
    counters = {
        "traversals": sum(r.traversals for r in cache.values()),
        "guess_calls": len(cache),
    }
    return ApproxResult(
        "greedy3",
        schedule,
        rounds,
        max(g_star - 1, 1),
        Fraction(3),
        guess=g_star,
        certificate=cert,
        counters=counters,
    )
