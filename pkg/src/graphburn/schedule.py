"""Burning-process semantics.

A schedule ``x_1, x_2, ...`` ignites ``x_i`` at the start of round ``i``; every
burning vertex ignites its neighbours each round, so

    burn_time(u) = min_i (i + d(x_i, u)).

Simulation is lenient: an activator that is already burning is a no-op, and
fires keep spreading after the sequence is exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphFormatError, bfs_distances

_INF = float("inf")


@dataclass(frozen=True)
class BurningSchedule:
    activators: tuple[int, ...]

    @classmethod
    def of(cls, activators: Iterable[int]) -> BurningSchedule:
        return cls(tuple(activators))

    def __len__(self):
        return len(self.activators)

    def __iter__(self):
        return iter(self.activators)

    def to_text(self, rounds: int | None = None) -> str:
        lines = [f"{i} {v}" for i, v in enumerate(self.activators, start=1)]
        if rounds is not None:
            lines.append(f"rounds {rounds}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BurnOutcome:
    burn_time: tuple[int | None, ...]
    completion_round: int
    complete: bool


@dataclass(frozen=True)
class DistanceCertificate:
    """``r`` vertices pairwise at distance >= 2r-1, proving burning number >= r."""

    r: int
    witnesses: tuple[int, ...]


def _check_indices(g: Graph, acts: Sequence[int]):
    for v in acts:
        if not 0 <= v < g.n:
            raise ValueError(f"activator {v} out of range for n={g.n}")


def simulate(g: Graph, schedule: BurningSchedule | Sequence[int]) -> BurnOutcome:
    acts = tuple(schedule)
    _check_indices(g, acts)
    adj = g.adj
    burn = [0] * g.n  # 0 = not burning; rounds start at 1
    frontier: list[int] = []
    t = 0
    while frontier or t < len(acts):
        t += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if not burn[w]:
                    burn[w] = t
                    nxt.append(w)
        if t <= len(acts):
            x = acts[t - 1]
            if not burn[x]:
                burn[x] = t
                nxt.append(x)
        frontier = nxt
    times = tuple(b or None for b in burn)
    return BurnOutcome(times, max(burn, default=0), all(burn))


def validate_strict(g: Graph, schedule: BurningSchedule | Sequence[int]) -> bool:
    """True iff every activator is not yet burning when ignited: d(x_i, x_j) >= j - i."""
    acts = tuple(schedule)
    _check_indices(g, acts)
    if len(set(acts)) != len(acts):
        return False
    for i, x in enumerate(acts):
        later = len(acts) - i - 1
        if later == 0:
            break
        dist = bfs_distances(g, x, depth_limit=later)
        for j in range(i + 1, len(acts)):
            if dist.get(acts[j], _INF) < j - i:
                return False
    return True


def _relax(adj, burn: list, source: int, start: int):
    # Lower burn times reachable from a fire lit at ``source`` in round ``start``.
    # A vertex that is not improved cannot lead to improvements behind it.
    if burn[source] <= start:
        return
    burn[source] = start
    frontier = [source]
    t = start
    while frontier:
        t += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if burn[w] > t:
                    burn[w] = t
                    nxt.append(w)
        frontier = nxt


def canonicalize(g: Graph, schedule: BurningSchedule | Sequence[int]) -> BurningSchedule:
    """Repair a lenient schedule into a strict one that finishes no later.

    An activator already burning at its round is replaced by the lowest-index
    vertex that is not yet burning; once everything burns, the rest is dropped.
    """
    acts = tuple(schedule)
    _check_indices(g, acts)
    burn: list[float] = [_INF] * g.n
    out = []
    for i, x in enumerate(acts, start=1):
        if burn[x] < i:
            x = next((v for v in range(g.n) if burn[v] >= i), None)
            if x is None:
                break
        out.append(x)
        _relax(g.adj, burn, x, i)
    return BurningSchedule(tuple(out))


def burn_times_from(g: Graph, rounds: dict[int, int]) -> list[float]:
    """Closed-form burn times for fires given as ``{round: vertex}``."""
    burn: list[float] = [_INF] * g.n
    for r, v in sorted(rounds.items()):
        _relax(g.adj, burn, v, r)
    return burn


def fill_schedule(g: Graph, fires: dict[int, int], last_round: int | None = None) -> BurningSchedule:
    """Turn ``{round: vertex}`` (possibly with empty rounds) into a strict schedule.

    Empty rounds get the lowest-index vertex not yet burning; the result is
    canonicalized, so it burns every vertex no later than the given fires do.
    """
    if not fires:
        return BurningSchedule(())
    last = max(fires) if last_round is None else last_round
    burn: list[float] = [_INF] * g.n
    acts = []
    for r in range(1, last + 1):
        if r in fires:
            v = fires[r]
        else:
            v = next((u for u in range(g.n) if burn[u] >= r), fires.get(r, 0))
        acts.append(v)
        _relax(g.adj, burn, v, r)
    return canonicalize(g, acts)


def verify_certificate(g: Graph, cert: DistanceCertificate) -> bool:
    w = cert.witnesses
    if cert.r < 1 or len(w) != cert.r or len(set(w)) != len(w):
        return False
    _check_indices(g, w)
    others = set(w)
    for x in w:
        near = bfs_distances(g, x, depth_limit=2 * cert.r - 2)
        if any(y in near for y in others if y != x):
            return False
    return True


def parse_schedule(text: bytes | str) -> BurningSchedule:
    """Read ``<round> <vertex>`` lines; rounds must run 1, 2, 3, ... without gaps."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    acts = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "rounds":
            continue
        if len(toks) != 2:
            raise GraphFormatError(f"expected '<round> <vertex>', got {line!r}", no)
        try:
            r, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", no) from None
        if r != len(acts) + 1:
            raise GraphFormatError(f"round {r} out of sequence (expected {len(acts) + 1})", no)
        if v < 0:
            raise GraphFormatError("negative vertex index", no)
        acts.append(v)
    return BurningSchedule(tuple(acts))
