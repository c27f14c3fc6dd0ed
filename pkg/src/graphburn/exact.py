"""Exact solvers: a brute-force burning-number oracle and the path-forest DP.

Burning in ``t`` rounds is the same as covering every vertex with balls of
radii ``t-1, t-2, ..., 0`` (the fire lit in round ``i`` has spread ``t-i`` by
round ``t``). On a path forest a ball of radius ``r`` covers at most ``2r+1``
consecutive vertices of one path, which gives the DP and the odd-size coverage
characterization below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import PATH_FOREST, Graph, PathForest, classify, components, distance_matrix, expand_forest
from .schedule import BurningSchedule, fill_schedule

DEFAULT_GENERAL_CAP = 12
DEFAULT_PATH_CAP = 40
DEFAULT_DP_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """The instance is larger than the configured exact-solver limit."""


@dataclass(frozen=True)
class ExactResult:
    burning_number: int
    schedule: BurningSchedule
    stats: dict = field(default_factory=dict, compare=False)


def _bits_desc(mask: int):
    while mask:
        r = mask.bit_length() - 1
        yield r
        mask ^= 1 << r


def _minimal_masks(masks):
    kept: list[int] = []
    for nm in sorted(masks, key=lambda x: bin(x).count("1")):
        if not any(k & ~nm == 0 for k in kept):
            kept.append(nm)
    return kept


class _BallCover:
    """Can balls of radii t-1..0 (one centre each) cover all vertices?"""

    def __init__(self, g: Graph):
        self.n = g.n
        dist = distance_matrix(g)
        self.ball = [[0] * (g.n + 1) for _ in range(g.n)]
        for v in range(g.n):
            for r in range(g.n + 1):
                self.ball[v][r] = sum(1 << u for u in range(g.n) if dist[v][u] <= r)
        self.near = [[[x for x in range(g.n) if dist[u][x] <= r] for r in range(g.n + 1)] for u in range(g.n)]
        self.maxball = [max(bin(self.ball[v][r]).count("1") for v in range(g.n)) for r in range(g.n + 1)]
        self.nodes = 0

    def solve(self, t: int):
        memo: dict = {}
        ball, near, maxball = self.ball, self.near, self.maxball

        def rec(unc: int, avail: int):
            if unc == 0:
                return ()
            key = (unc, avail)
            if key in memo:
                return memo[key]
            self.nodes += 1
            res = None
            if bin(unc).count("1") <= sum(maxball[r] for r in _bits_desc(avail)):
                u = (unc & -unc).bit_length() - 1
                for r in _bits_desc(avail):
                    options = {}
                    for x in near[u][r]:
                        options.setdefault(unc & ~ball[x][r], x)
                    for nm in _minimal_masks(options):
                        sub = rec(nm, avail & ~(1 << r))
                        if sub is not None:
                            res = ((r, options[nm]),) + sub
                            break
                    if res is not None:
                        break
            memo[key] = res
            return res

        return rec((1 << self.n) - 1, (1 << t) - 1)


def exact_burning_number(
    g: Graph, cap: int = DEFAULT_GENERAL_CAP, path_cap: int = DEFAULT_PATH_CAP
) -> ExactResult:
    """Burning number by iterative deepening over ball covers (small graphs only)."""
    if g.n == 0:
        return ExactResult(0, BurningSchedule(()))
    limit = path_cap if classify(g).kind == PATH_FOREST else cap
    if g.n > limit:
        raise CapExceeded(f"oracle too large: n={g.n} exceeds cap {limit}")
    comps = len(components(g))
    # connected graphs burn within 2*ceil(sqrt(n)) - 1 rounds
    t_max = 2 * (math.isqrt(g.n - 1) + 1) - 1 if comps == 1 else g.n
    cover = _BallCover(g)
    for t in range(comps, t_max + 1):
        found = cover.solve(t)
        if found is not None:
            fires = {t - r: x for r, x in found}
            sched = fill_schedule(g, fires, last_round=t)
            return ExactResult(t, sched, {"search_nodes": cover.nodes})
    raise RuntimeError(f"no cover found up to t={t_max}; distance bound violated")


def path_dp(forest: PathForest, cap: int = DEFAULT_DP_CAP) -> ExactResult:
    """Optimal schedule for a path forest by DP over remaining path lengths.

    For each candidate ``t`` the fires covering ``2t-1, 2t-3, ..., 1``
    vertices are placed largest first. A state is the sorted multiset of
    remaining lengths; a fire covers a prefix of one path, as much as it can
    (shorter remainders are never harder). States whose remainder exceeds
    what the unplaced fires can cover are dropped.
    """
    lengths = forest.lengths
    start = tuple(sorted(lengths))
    states = 0
    t = max(forest.b, math.isqrt(forest.total - 1) + 1)
    while True:
        levels = [{start: None}]
        for s in range(t, 0, -1):
            reach = 2 * s - 1
            level: dict = {}
            for w in levels[-1]:
                if not w:
                    level.setdefault(w, (w, 0))
                    continue
                for j, r in enumerate(w):
                    if j and w[j - 1] == r:
                        continue
                    rest = r - min(reach, r)
                    v = w[:j] + w[j + 1 :]
                    if rest:
                        v = tuple(sorted(v + (rest,)))
                    # s-1 fires remain, covering (s-1)^2 vertices
                    if len(v) > s - 1 or sum(v) > (s - 1) ** 2 or v in level:
                        continue
                    level[v] = (w, r)
            states += len(level)
            if states > cap:
                raise CapExceeded(f"DP table too large for {lengths}")
            levels.append(level)
        if () in levels[-1]:
            break
        t += 1

    moves = []
    state = ()
    for idx in range(t, 0, -1):
        prev, r = levels[idx][state]
        moves.append((t - idx + 1, r))  # (fire size index s, remainder it hit)
        state = prev
    offsets = forest.offsets()
    remaining = list(lengths)
    fires = {}
    for s, r in reversed(moves):
        if r == 0:
            continue
        j = remaining.index(r)
        done = lengths[j] - r
        fires[t - s + 1] = offsets[j] + min(done + s - 1, lengths[j] - 1)
        remaining[j] = r - min(2 * s - 1, r)
    g = expand_forest(forest)
    sched = fill_schedule(g, fires, last_round=t)
    return ExactResult(t, sched, {"dp_states": states})


def coverage_feasible(lengths, t: int, budget: int | None = None) -> bool:
    """Can sizes {1, 3, ..., 2t-1}, each used at most once, give every path a share >= its length?"""
    sizes = [2 * i - 1 for i in range(t, 0, -1)]
    suffix = [0] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    memo: dict = {}
    nodes = 0

    def rec(idx: int, demands: tuple) -> bool:
        nonlocal nodes
        if not demands:
            return True
        if idx == len(sizes) or len(demands) > len(sizes) - idx or sum(demands) > suffix[idx]:
            return False
        key = (idx, demands)
        if key in memo:
            return memo[key]
        nodes += 1
        if budget is not None and nodes > budget:
            raise CapExceeded("coverage search budget exhausted")
        s = sizes[idx]
        ok = False
        seen = set()
        for pos, d in enumerate(demands):
            if d in seen:
                continue
            seen.add(d)
            rest = demands[:pos] + demands[pos + 1:]
            if d > s:
                rest = tuple(sorted(rest + (d - s,)))
            if rec(idx + 1, rest):
                ok = True
                break
        if not ok:
            ok = rec(idx + 1, demands)
        memo[key] = ok
        return ok

    return rec(0, tuple(sorted(x for x in lengths if x > 0)))


def coverage_burning_number(lengths, budget: int | None = None) -> int:
    lengths = [x for x in lengths if x > 0]
    if not lengths:
        return 0
    t = max(len(lengths), math.isqrt(sum(lengths) - 1) + 1)
    while not coverage_feasible(lengths, t, budget):
        t += 1
    return t
