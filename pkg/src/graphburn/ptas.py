"""Radius-grouping approximation scheme for path forests of arbitrary shape.

Deciding "burnable in g rounds" is the same as placing fires of radii
``1..g`` (a fire of radius r burns at most ``2r-1`` path vertices). Radii are
split into groups of ``floor(g/k)`` consecutive values; the weak instance
drops the smallest group and rounds every other radius down to its group
minimum, the strong instance rounds every radius up to its group maximum.
A weak instance has at most ``k+1`` distinct radii, which keeps the decision
procedure polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .approx import ApproxResult
from .exact import CapExceeded, coverage_feasible
from .graph import PathForest, expand_forest
from .schedule import BurningSchedule, fill_schedule, simulate

DEFAULT_ALPHA = 3
DEFAULT_LB_BUDGET = 200_000


@dataclass
class RadiusMultiset:
    counts: dict[int, int]
    provenance: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return sum(self.counts.values())

    @property
    def capacity(self) -> int:
        return sum(c * (2 * r - 1) for r, c in self.counts.items())

    def radii(self) -> list[int]:
        return sorted((r for r, c in self.counts.items() for _ in range(c)), reverse=True)


@dataclass
class PtasDecision:
    answer: bool
    short: dict[int, tuple[int, ...]] = field(default_factory=dict)  # path index -> radius classes
    long: dict[int, tuple[int, ...]] = field(default_factory=dict)
    states: int = 0


def build_instances(g: int, k: int) -> tuple[RadiusMultiset, RadiusMultiset]:
    if not 1 <= k <= g:
        raise ValueError("need g >= k >= 1")
    beta = g // k
    groups = [tuple(range(lo + 1, min(lo + beta, g) + 1)) for lo in range(0, g, beta)]
    weak = RadiusMultiset({}, {})
    strong = RadiusMultiset({}, {})
    for i, grp in enumerate(groups):
        if i > 0:
            weak.counts[grp[0]] = len(grp)
            weak.provenance[grp[0]] = grp
        strong.counts[grp[-1]] = len(grp)
        strong.provenance[grp[-1]] = grp
    return weak, strong


def _covering_subvectors(length: int, radii: list[int], avail: tuple[int, ...]):
    """Fire-count vectors within ``avail`` covering ``length``; larger counts of a class are skipped once enough."""
    cover = [2 * r - 1 for r in radii]
    out = []

    def rec(c: int, acc: int, chosen: list[int]):
        if acc >= length:
            out.append(tuple(chosen) + (0,) * (len(radii) - c))
            return
        if c == len(radii):
            return
        for a in range(avail[c] + 1):
            chosen.append(a)
            rec(c + 1, acc + a * cover[c], chosen)
            chosen.pop()
            if acc + a * cover[c] >= length:
                break

    rec(0, 0, [])
    return out


def ptas_decide(
    forest: PathForest,
    fires: RadiusMultiset,
    alpha=DEFAULT_ALPHA,
    g: int | None = None,
    k: int | None = None,
) -> PtasDecision:
    """Try to burn ``forest`` with the given fires.

    Short paths (length <= alpha*g) are searched exhaustively with a memoized
    DP over the remaining fire counts; the fires left after each short-path
    assignment go to the long paths greedily, largest radius first.
    """
    radii = sorted(fires.counts, reverse=True)
    if g is None:
        g = max(radii, default=0)
    if k is not None:
        # k+1 classes once g >= k(k+1); below that grouping leaves up to 2k
        if len(radii) > max(k + 1, 2 * k) or any(r <= g // k for r in radii):
            raise ValueError("fires must have few distinct radii, all above floor(g/k)")
    lengths = forest.lengths
    if forest.b > fires.size or forest.total > fires.capacity:
        return PtasDecision(False)

    short = sorted((i for i, x in enumerate(lengths) if x <= alpha * g), key=lambda i: -lengths[i])
    long = sorted((i for i, x in enumerate(lengths) if x > alpha * g), key=lambda i: -lengths[i])
    start = tuple(fires.counts[r] for r in radii)
    failed: set = set()
    states = 0

    def assign_long(avail: tuple[int, ...]):
        pool = [r for r, c in zip(radii, avail) for _ in range(c)]
        out: dict[int, tuple[int, ...]] = {}
        pos = 0
        for i in long:
            need, used = lengths[i], []
            while need > 0 and pos < len(pool):
                used.append(pool[pos])
                need -= 2 * pool[pos] - 1
                pos += 1
            if need > 0:
                return None
            out[i] = tuple(used)
        return out

    def rec(p: int, avail: tuple[int, ...]):
        nonlocal states
        if p == len(short):
            done = assign_long(avail)
            return None if done is None else ({}, done)
        key = (p, avail)
        if key in failed:
            return None
        states += 1
        i = short[p]
        for vec in _covering_subvectors(lengths[i], radii, avail):
            rest = tuple(a - u for a, u in zip(avail, vec))
            sub = rec(p + 1, rest)
            if sub is not None:
                sub[0][i] = tuple(r for r, c in zip(radii, vec) for _ in range(c))
                return sub
        failed.add(key)
        return None

    found = rec(0, start)
    if found is None:
        return PtasDecision(False, states=states)
    return PtasDecision(True, found[0], found[1], states)


def materialize(forest: PathForest, decision: PtasDecision, fires: RadiusMultiset, g: int) -> BurningSchedule:
    """Schedule for a yes-decision: each rounded fire becomes a distinct original radius >= it."""
    pools = {r: sorted(orig, reverse=True) for r, orig in fires.provenance.items()}
    offsets = forest.offsets()
    chosen: dict[int, list[int]] = {}
    for i, classes in list(decision.short.items()) + list(decision.long.items()):
        chosen[i] = [pools[r].pop(0) for r in classes]
    rounds: dict[int, int] = {}
    for i, rs in chosen.items():
        prefix = 0
        length = forest.lengths[i]
        for r in sorted(rs, reverse=True):
            rounds[g - r + 1] = offsets[i] + min(prefix + r - 1, length - 1)
            prefix += 2 * r - 1
    return fill_schedule(expand_forest(forest), rounds)


def certified_lower_bound(forest: PathForest, below: int, budget: int = DEFAULT_LB_BUDGET) -> int | None:
    """Largest g' < ``below`` refuted by the coverage characterization, plus one."""
    try:
        for gp in range(below - 1, 0, -1):
            if not coverage_feasible(forest.lengths, gp, budget):
                return gp + 1
    except CapExceeded:
        return None
    return 1


def ptas_driver(
    forest: PathForest, eps=Fraction(1), alpha=DEFAULT_ALPHA, lb_budget: int = DEFAULT_LB_BUDGET
) -> ApproxResult:
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    k = math.ceil(1 / eps) + 1
    g = k - 1
    states = 0
    while True:
        g += 1
        weak, _ = build_instances(g, k)
        dec = ptas_decide(forest, weak, alpha, g=g, k=k)
        states += dec.states
        if dec.answer:
            break
    schedule = materialize(forest, dec, weak, g)
    rounds = simulate(expand_forest(forest), schedule).completion_round
    if rounds > g:
        raise RuntimeError(f"materialized schedule needs {rounds} > {g} rounds")
    lb = certified_lower_bound(forest, g, lb_budget)
    return ApproxResult(
        "ptas",
        schedule,
        rounds,
        lb,
        1 + Fraction(1, k - 1),
        guess=g,
        counters={"decision_states": states},
        info={
            "k": k,
            "alpha": alpha,
            "lower_bound_source": "coverage" if lb is not None else "analytical, uncertified",
            "analytical_lower_bound": Fraction(g - 1) * (1 - Fraction(1, k)),
        },
    )
