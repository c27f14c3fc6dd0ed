"""Bin covering and its correspondence with burning path forests.

Sizes are kept as integer numerators over a common denominator, so "a bin is
covered" is an exact integer comparison ``sum >= denominator``.

For a forest with path lengths ``n_1 <= ... <= n_b`` let ``m_i = ceil((n_i+1)/2)``
and ``C = 3 m_b``. The k-instance has one large item ``1 - m_i/C`` per path and
small items ``q_j = min(j/C, 1/3)``. A small item ``q_j`` in the bin of path
``i`` stands for a fire lit on that path in round ``k - j``, whose spread
reaches ``j`` by round ``k``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .approx import ApproxResult
from .exact import CapExceeded
from .graph import PathForest, expand_forest
from .schedule import BurningSchedule, fill_schedule, simulate

log = logging.getLogger(__name__)

DEFAULT_ITEM_CAP = 64

LARGE = "large"
SMALL = "small"
OTHER = "item"


@dataclass(frozen=True)
class Item:
    size: int  # numerator over the instance denominator
    kind: str
    index: int

    def label(self) -> str:
        return {LARGE: "p", SMALL: "q"}.get(self.kind, "x") + str(self.index)


@dataclass(frozen=True)
class CoveringInstance:
    denominator: int
    items: tuple[Item, ...]
    m: tuple[int, ...] = ()
    c_star: Fraction | None = None

    @property
    def large(self) -> tuple[Item, ...]:
        return tuple(x for x in self.items if x.kind == LARGE)

    @property
    def small(self) -> tuple[Item, ...]:
        return tuple(x for x in self.items if x.kind == SMALL)

    def fraction(self, item: Item) -> Fraction:
        return Fraction(item.size, self.denominator)

    @classmethod
    def from_fractions(cls, sizes: Iterable) -> CoveringInstance:
        """Generic instance; items >= 2/3 are tagged large, items <= 1/3 small."""
        fr = [Fraction(s) for s in sizes]
        if any(not 0 < s <= 1 for s in fr):
            raise ValueError("item sizes must lie in (0, 1]")
        den = math.lcm(*(s.denominator for s in fr)) if fr else 1
        items = []
        for i, s in enumerate(fr, start=1):
            num = s.numerator * (den // s.denominator)
            items.append(Item(num, _kind(num, den), i))
        return cls(den, tuple(items))


def _kind(size: int, den: int) -> str:
    if 3 * size >= 2 * den:
        return LARGE
    if 3 * size <= den:
        return SMALL
    return OTHER


@dataclass(frozen=True)
class CoveringSolution:
    denominator: int
    bins: tuple[tuple[Item, ...], ...]
    unused: tuple[Item, ...] = ()
    stats: dict = field(default_factory=dict, compare=False)

    def bin_sum(self, i: int) -> int:
        return sum(x.size for x in self.bins[i])

    def is_covered(self, i: int) -> bool:
        return self.bin_sum(i) >= self.denominator

    @property
    def covered_count(self) -> int:
        return sum(self.is_covered(i) for i in range(len(self.bins)))

    def to_text(self) -> str:
        lines = []
        for i, b in enumerate(self.bins, start=1):
            large = [x.label() for x in b if x.kind == LARGE]
            rest = [x.label() for x in b if x.kind != LARGE]
            status = "covered" if self.is_covered(i - 1) else "open"
            lines.append(f"bin {i}: large {' '.join(large) or '-'}, smalls {' '.join(rest) or '-'} ({status})")
        return "\n".join(lines) + "\n"


def path_demands(forest: PathForest) -> tuple[int, ...]:
    return tuple((x + 2) // 2 for x in forest.lengths)


def canonical_constant(forest: PathForest) -> Fraction:
    m = path_demands(forest)
    return 1 - Fraction(m[0], 3 * m[-1])


def build_k_instance(forest: PathForest, k: int, small_limit: int | None = None) -> CoveringInstance:
    """The k-instance; ``small_limit`` keeps only ``q_1..q_limit`` (default: all ``k``)."""
    if k < 1:
        raise ValueError("k must be positive")
    m = path_demands(forest)
    C = 3 * m[-1]
    last = k if small_limit is None else min(k, small_limit)
    large = [Item(C - mi, LARGE, i) for i, mi in enumerate(m, start=1)]
    small = [Item(min(j, m[-1]), SMALL, j) for j in range(1, last + 1)]
    return CoveringInstance(C, tuple(large + small), m, canonical_constant(forest))


# -- solvers -----------------------------------------------------------------


def solve_covering(inst: CoveringInstance, mode: str = "exact", cap: int = DEFAULT_ITEM_CAP) -> CoveringSolution:
    if mode == "greedy":
        return _next_fit_decreasing(inst)
    if mode != "exact":
        raise ValueError(f"unknown covering mode {mode!r}")
    if len(inst.items) > cap:
        raise CapExceeded(f"{len(inst.items)} items exceed the exact covering cap {cap}")
    return _exact_cover(inst)


def _next_fit_decreasing(inst: CoveringInstance) -> CoveringSolution:
    den = inst.denominator
    bins, cur, fill = [], [], 0
    for it in sorted(inst.items, key=lambda x: (-x.size, x.kind, x.index)):
        cur.append(it)
        fill += it.size
        if fill >= den:
            bins.append(tuple(cur))
            cur, fill = [], 0
    if cur:
        bins.append(tuple(cur))
    return CoveringSolution(den, tuple(bins), (), {"mode": "greedy"})


def _exact_cover(inst: CoveringInstance) -> CoveringSolution:
    """Maximum number of covered bins.

    Items go in decreasing size; each joins an open bin, opens a new one or is
    left out. The state is the sorted tuple of open-bin fills; bins that can no
    longer be completed from the remaining items are discarded from the state.
    """
    den = inst.denominator
    items = sorted(inst.items, key=lambda x: (-x.size, x.kind, x.index))
    sizes = [x.size for x in items]
    suffix = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]

    def step(idx: int, opens: tuple, choice):
        s = sizes[idx]
        closed = 0
        lst = list(opens)
        if choice[0] == "bin":
            f = lst.pop(choice[1]) + s
        elif choice[0] == "new":
            f = s
        else:
            f = None
        if f is not None:
            if f >= den:
                closed = 1
            else:
                lst.append(f)
        rem = suffix[idx + 1]
        lst = sorted((x for x in lst if x + rem >= den), reverse=True)
        return tuple(lst), closed

    def choices(opens: tuple):
        seen = set()
        for pos, f in enumerate(opens):
            if f not in seen:
                seen.add(f)
                yield ("bin", pos)
        yield ("new",)
        yield ("drop",)

    memo: dict = {}
    nodes = 0

    def rec(idx: int, opens: tuple) -> int:
        nonlocal nodes
        if idx == len(items):
            return 0
        key = (idx, opens)
        if key in memo:
            return memo[key][0]
        nodes += 1
        bound = (suffix[idx] + sum(opens)) // den
        best, best_choice = -1, None
        for ch in choices(opens):
            nxt, closed = step(idx, opens, ch)
            val = closed + rec(idx + 1, nxt)
            if val > best:
                best, best_choice = val, ch
                if best >= bound:
                    break
        memo[key] = (best, best_choice)
        return best

    rec(0, ())

    # replay the optimal choices with concrete bins
    open_bins: list[list] = []  # [fill, items]
    done: list[tuple] = []
    unused: list[Item] = []
    opens: tuple = ()
    for idx, it in enumerate(items):
        ch = memo[(idx, opens)][1]
        open_bins.sort(key=lambda b: -b[0])
        if ch[0] == "bin":
            target = open_bins.pop(ch[1])
        elif ch[0] == "new":
            target = [0, []]
        else:
            target = None
            unused.append(it)
        if target is not None:
            target[0] += it.size
            target[1].append(it)
            if target[0] >= den:
                done.append(tuple(target[1]))
            else:
                open_bins.append(target)
        rem = suffix[idx + 1]
        for b in [b for b in open_bins if b[0] + rem < den]:
            open_bins.remove(b)
            done.append(tuple(b[1]))
        opens, _ = step(idx, opens, ch)
    done.extend(tuple(b[1]) for b in open_bins)
    return CoveringSolution(den, tuple(done), tuple(unused), {"mode": "exact", "nodes": nodes})


# -- normalization ------------------------------------------------------------


def normalize_bins(sol: CoveringSolution) -> CoveringSolution:
    """Exchange items until every large item sits alone (as the only large) in a covered bin.

    A covered bin of small items gives up a subset summing into (1/3, 2/3] and
    receives a surplus large item in return; both bins stay covered.
    """
    den = sol.denominator
    every = [x for b in sol.bins for x in b] + list(sol.unused)
    if any(_kind(x.size, den) == OTHER for x in every):
        raise ValueError("normalization needs every item to be >= 2/3 or <= 1/3")
    n_large = sum(_kind(x.size, den) == LARGE for x in every)
    if sol.covered_count < n_large:
        raise ValueError(f"only {sol.covered_count} covered bins for {n_large} large items")

    bins = [list(b) for b in sol.bins]
    unused = list(sol.unused)

    def covered(b):
        return sum(x.size for x in b) >= den

    def larges(b):
        return [x for x in b if _kind(x.size, den) == LARGE]

    while True:
        empty = [b for b in bins if covered(b) and not larges(b)]
        if not empty:
            break
        source = next((b for b in bins if covered(b) and len(larges(b)) >= 2), None)
        if source is None:
            source = next((b for b in bins if not covered(b) and larges(b)), None)
        if source is None and any(_kind(x.size, den) == LARGE for x in unused):
            source = unused
        if source is None:
            break
        target = empty[0]
        moved, acc = [], 0
        for x in sorted(target, key=lambda x: (x.size, x.index)):
            moved.append(x)
            acc += x.size
            if 3 * acc > den:
                break
        for x in moved:
            target.remove(x)
        big = larges(source)[0]
        source.remove(big)
        target.append(big)
        source.extend(moved)

    for b in bins:
        if larges(b) and (len(larges(b)) > 1 or not covered(b)):
            raise ValueError("normalization failed: a large item is not alone in a covered bin")
    if any(_kind(x.size, den) == LARGE for x in unused):
        raise ValueError("normalization failed: a large item was left unused")
    out = tuple(tuple(b) for b in bins if b)
    return CoveringSolution(den, out, tuple(unused), sol.stats)


# -- conversions ---------------------------------------------------------------


def covering_to_schedule(forest: PathForest, k: int, sol: CoveringSolution) -> BurningSchedule:
    """Burning schedule finishing within ``k`` rounds from a covering of >= b bins.

    Needs small indices in ``1..k-1``: item ``q_j`` becomes a fire in round ``k-j``.
    """
    norm = normalize_bins(sol)
    offsets = forest.offsets()
    fires: dict[int, int] = {}
    paths_done = set()
    for b in norm.bins:
        big = [x for x in b if x.kind == LARGE]
        if not big:
            continue
        i = big[0].index - 1
        if not norm.denominator <= sum(x.size for x in b):
            raise ValueError(f"bin of p{i + 1} is not covered")
        paths_done.add(i)
        prefix = 0
        length = forest.lengths[i]
        for it in sorted((x for x in b if x.kind == SMALL), key=lambda x: -x.index):
            j = it.index
            if not 1 <= j <= k - 1:
                raise ValueError(f"small item q{j} has no round in a {k}-round schedule")
            rnd = k - j
            if rnd in fires:
                raise ValueError(f"two fires in round {rnd}")
            fires[rnd] = offsets[i] + min(prefix + j, length - 1)
            prefix += 2 * j + 1
    if len(paths_done) != forest.b:
        raise ValueError("every large item must sit in a covered bin")
    return fill_schedule(expand_forest(forest), fires)


def schedule_to_covering(forest: PathForest, k: int, schedule: BurningSchedule) -> CoveringSolution:
    """Covering of the k-instance with one covered bin per path, from a schedule done by round k-1."""
    g = expand_forest(forest)
    out = simulate(g, schedule)
    if not out.complete or out.completion_round > k - 1:
        raise ValueError(f"schedule must burn everything within {k - 1} rounds")
    inst = build_k_instance(forest, k)
    smalls = {x.index: x for x in inst.small}
    path_of = [i for i, x in enumerate(forest.lengths) for _ in range(x)]
    bins = [[p] for p in inst.large]
    used = set()
    for rnd, v in enumerate(schedule, start=1):
        if rnd > k - 1:
            break
        y = k - rnd
        bins[path_of[v]].append(smalls[y])
        used.add(y)
    unused = tuple(x for x in inst.small if x.index not in used)
    return CoveringSolution(inst.denominator, tuple(tuple(b) for b in bins), unused)


# -- driver ----------------------------------------------------------------------


def fptas_eps0(c_star: Fraction, eps: Fraction) -> Fraction:
    return (1 - c_star) * eps / (4 + (5 - c_star) * eps)


def fptas_driver(forest: PathForest, eps=Fraction(1, 2), mode: str = "exact", cap: int = DEFAULT_ITEM_CAP) -> ApproxResult:
    """Smallest k whose restricted k-instance covers b bins, turned into a schedule.

    With the exact covering solver the (k-1)-instance failing certifies that
    no schedule finishes within k-2 rounds, so the result is at most optimum + 1.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if forest.b < 2:
        raise ValueError("the covering driver needs at least two paths")
    c_star = canonical_constant(forest)
    eps0 = fptas_eps0(c_star, eps)
    if c_star >= Fraction(9, 10):
        log.warning("canonical constant %s >= 0.9: path lengths are far from regular", c_star)
    b = forest.b
    nodes = 0
    k = 1
    while True:
        k += 1
        inst = build_k_instance(forest, k, small_limit=k - 1)
        sol = solve_covering(inst, mode, cap)
        nodes += sol.stats.get("nodes", 0)
        if sol.covered_count >= b:
            break
    schedule = covering_to_schedule(forest, k, sol)
    rounds = simulate(expand_forest(forest), schedule).completion_round
    return ApproxResult(
        "fptas",
        schedule,
        rounds,
        k - 1 if mode == "exact" else None,
        1 + eps,
        guess=k,
        counters={"covering_nodes": nodes},
        info={"c_star": c_star, "eps0": eps0, "k_star": k, "covering": sol},
    )
