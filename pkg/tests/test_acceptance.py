"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the summary lines.
"""

import itertools
import math
import random
import time

from conftest import path_graph, random_connected
from graphburn.approx import approx3
from graphburn.bincover import build_k_instance, covering_to_schedule, fptas_driver, schedule_to_covering, solve_covering
from graphburn.exact import exact_burning_number, path_dp
from graphburn.generators import gadget, gadget_landmarks, gnp, random_forest, random_tree
from graphburn.graph import Graph, PathForest, bfs_distances, expand_forest
from graphburn.ptas import ptas_driver
from graphburn.schedule import BurningSchedule, simulate, verify_certificate
from graphburn.tree import approx2, burn_guess_tree, root_tree


def verdict(num: int, ok: bool, detail: str):
    print(f"\ncriterion {num:2d} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def test_01_oracle_agreement():
    t0 = time.perf_counter()
    forests = [
        combo
        for b in (1, 2, 3)
        for combo in itertools.combinations_with_replacement(range(1, 10), b)
    ]
    rng = random.Random(101)
    while len(forests) < 219 + 200:
        total = rng.randint(1, 14)
        parts, left = [], total
        while left:
            x = rng.randint(1, left)
            parts.append(x)
            left -= x
        forests.append(tuple(parts))
    mismatches = []
    for lengths in forests:
        f = PathForest.of(lengths)
        g = expand_forest(f)
        dp = path_dp(f)
        ex = exact_burning_number(g)
        out = simulate(g, dp.schedule)
        if dp.burning_number != ex.burning_number or out.completion_round != dp.burning_number:
            mismatches.append(lengths)
    elapsed = time.perf_counter() - t0
    verdict(
        1,
        not mismatches and elapsed < 300,
        f"{len(forests)} forests, {len(mismatches)} mismatches, {elapsed:.1f}s",
    )


def test_02_single_path_law():
    bad = []
    for n in range(1, 50):
        t = path_dp(PathForest.of([n])).burning_number
        if t != math.isqrt(n - 1) + 1 or t > 2 * math.ceil(math.sqrt(n)) - 1:
            bad.append(n)
        if n <= 12 and exact_burning_number(path_graph(n)).burning_number != t:
            bad.append(n)
    verdict(2, not bad, f"n=1..49 checked, oracle cross-check n<=12, bad={bad}")


def _check_approx3(g: Graph, violations: list, label):
    opt = exact_burning_number(g).burning_number
    res = approx3(g)
    gs = res.guess
    cert_ok = gs == 1 or (res.certificate is not None and res.certificate.r == gs - 1 and verify_certificate(g, res.certificate))
    if res.rounds > 3 * opt or res.rounds > 3 * gs - 3 or not cert_ok or res.opt_lower_bound > opt:
        violations.append(label)


def test_03_three_approx():
    rng = random.Random(303)
    violations = []
    connected = 0
    while connected < 5000:
        n = rng.randint(1, 9)
        _check_approx3(random_connected(n, rng), violations, ("conn", connected))
        connected += 1
    for i in range(500):
        n = rng.randint(1, 12)
        g = gnp(n, rng.random(), rng.randrange(2**63))
        _check_approx3(g, violations, ("gnp", i))
    verdict(3, not violations, f"{connected} connected graphs n<=9 + 500 G(n<=12,p), violations={violations[:5]}")


def test_04_gadget_tightness():
    rows = []
    ok = True
    for k in range(3, 11):
        g = gadget(k)
        lm = gadget_landmarks(k)
        tips = lm["tips"]
        order = tips + [v for v in range(g.n) if v not in set(tips)]
        res = approx3(g, order=order)
        hand = simulate(g, BurningSchedule((lm["hub"], lm["tail_middle"])))
        good = res.rounds == 3 * k - 2 and hand.complete and hand.completion_round <= k + 1
        ok &= good
        rows.append(f"k={k}: rounds {res.rounds} vs 3k-2={3 * k - 2}, hand {hand.completion_round}")
    verdict(4, ok, "; ".join(rows))


def test_05_two_approx():
    rng = random.Random(505)
    violations = []
    for i in range(500):
        n = rng.randint(1, 12)
        t = random_tree(n, rng.randrange(2**63))
        opt = exact_burning_number(t).burning_number
        roots = rng.sample(range(n), min(5, n))
        for r in roots:
            res = approx2(t, root=r)
            if res.rounds > 2 * opt:
                violations.append(("ratio", i, r))
            rooted = root_tree(t, r)
            for guess in range(1, n + 1):
                if not burn_guess_tree(rooted, guess).accepted and opt <= guess:
                    violations.append(("badguess", i, r, guess))
    verdict(5, not violations, f"500 trees n<=12 x <=5 roots, violations={violations[:5]}")


def test_06_fptas_band():
    rng = random.Random(606)
    outside = []
    for i in range(100):
        L = rng.randint(1, 15)
        b = rng.randint(2, 6)
        f = random_forest(b, L, L + 2, rng.randrange(2**63))
        opt = path_dp(f).burning_number
        res = fptas_driver(f)
        if res.rounds not in (opt, opt + 1) or not simulate(expand_forest(f), res.schedule).complete:
            outside.append((f.lengths, res.rounds, opt))
    big = fptas_driver(PathForest.of([9, 9, 9, 9]))
    k_star_ok = big.info["k_star"] == 7 == path_dp(PathForest.of([9, 9, 9, 9])).burning_number
    verdict(6, not outside and k_star_ok, f"100 near-regular forests outside band={outside[:5]}; [9,9,9,9] k*={big.info['k_star']}")


def _roundtrips(f: PathForest, problems: list):
    g = expand_forest(f)
    opt = path_dp(f)
    t = opt.burning_number
    # schedule -> covering: a t-round schedule covers b bins in every k >= t+1 instance
    for k in (t + 1, t + 2):
        sol = schedule_to_covering(f, k, opt.schedule)
        if sol.covered_count < f.b:
            problems.append(("to-cover", f.lengths, k))
        back = covering_to_schedule(f, k, sol)
        if simulate(g, back).completion_round > k:
            problems.append(("cover-back", f.lengths, k))
    # covering -> schedule: whenever q_1..q_{k-1} cover b bins, the schedule fits in k rounds
    for k in range(2, t + 3):
        sol = solve_covering(build_k_instance(f, k, small_limit=k - 1))
        if sol.covered_count >= f.b:
            out = simulate(g, covering_to_schedule(f, k, sol))
            if not out.complete or out.completion_round > k:
                problems.append(("to-schedule", f.lengths, k))


def test_07_reduction_roundtrips():
    problems = []
    m1344 = PathForest.of([1, 5, 7, 7])
    inst = build_k_instance(m1344, 5)
    base_ok = inst.m == (1, 3, 4, 4) and inst.denominator == 12 and solve_covering(inst).covered_count == 4
    _roundtrips(m1344, problems)
    rng = random.Random(707)
    for _ in range(60):
        _roundtrips(random_forest(rng.randint(1, 5), 1, 14, rng.randrange(2**63)), problems)
    verdict(7, base_ok and not problems, f"m=(1,3,4,4) instance ok={base_ok}, 61 forests, problems={problems[:5]}")


def test_08_ptas_guarantee():
    rng = random.Random(808)
    violations = []
    for i in range(100):
        f = random_forest(rng.randint(1, 8), 1, 30, rng.randrange(2**63))
        opt = path_dp(f).burning_number
        res = ptas_driver(f, eps=1)
        out = simulate(expand_forest(f), res.schedule)
        if res.rounds > 2 * opt or not out.complete or out.completion_round > res.guess:
            violations.append((f.lengths, res.rounds, opt))
    verdict(8, not violations, f"100 forests b<=8 lengths<=30, violations={violations[:5]}")


def test_09_traversal_scaling():
    # average degree 20 keeps G(n,p) connected at every size
    rows = []
    for m in (10**4, 10**5, 10**6):
        n = m // 10
        g = gnp(n, 2 * m / (n * (n - 1)), seed=909)
        t0 = time.perf_counter()
        res = approx3(g)
        wall = time.perf_counter() - t0
        rows.append((g.n, g.m, res.counters["traversals"], wall))
    n0, m0, t0_, _ = rows[0]
    c = t0_ / (m0 * math.log(n0))
    ok = all(t <= 1.5 * c * m * math.log(n) for n, m, t, _ in rows) and rows[-1][3] < 10
    detail = ", ".join(f"m={m}: {t} traversals ({t / (c * m * math.log(n)):.2f}x fit), {w:.2f}s" for n, m, t, w in rows)
    verdict(9, ok, detail)


def test_10_simulator_law():
    rng = random.Random(1010)
    mismatches = 0
    for _ in range(1000):
        n = rng.randint(1, 30)
        p = rng.choice([0.0, 0.05, 0.1, 0.3, 0.8])
        g = gnp(n, p, rng.randrange(2**63))
        sched = [rng.randrange(n) for _ in range(rng.randint(1, n))]
        out = simulate(g, sched)
        dists = [bfs_distances(g, x) for x in sched]
        for u in range(n):
            cand = [i + 1 + d[u] for i, d in enumerate(dists) if u in d]
            if out.burn_time[u] != (min(cand) if cand else None):
                mismatches += 1
                break
    verdict(10, mismatches == 0, f"1000 random pairs, mismatches={mismatches}")
