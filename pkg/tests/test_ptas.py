import random
from fractions import Fraction

import pytest

from graphburn.exact import path_dp
from graphburn.generators import random_forest
from graphburn.graph import PathForest, expand_forest
from graphburn.ptas import RadiusMultiset, build_instances, materialize, ptas_decide, ptas_driver
from graphburn.schedule import simulate


def test_build_instances_g6_k3():
    weak, strong = build_instances(6, 3)
    assert weak.counts == {3: 2, 5: 2}
    assert strong.counts == {2: 2, 4: 2, 6: 2}
    assert weak.provenance == {3: (3, 4), 5: (5, 6)}


def test_build_instances_beta_one():
    weak, strong = build_instances(5, 5)
    assert weak.counts == {r: 1 for r in range(2, 6)}
    assert strong.counts == {r: 1 for r in range(1, 6)}


def test_build_instances_rejects_small_g():
    with pytest.raises(ValueError):
        build_instances(2, 3)


@pytest.mark.parametrize("g, k", [(g, k) for g in range(2, 30) for k in range(2, 6) if g >= k])
def test_weak_instance_shape(g, k):
    weak, strong = build_instances(g, k)
    assert len(weak.counts) <= 2 * k
    if g >= k * (k + 1):
        assert len(weak.counts) <= k + 1
    assert all(r > g // k for r in weak.counts)
    assert strong.size == g
    # weak radii are dominated by the originals they stand for
    assert all(min(orig) == r for r, orig in weak.provenance.items())


def test_decide_examples():
    assert ptas_decide(PathForest.of([3]), RadiusMultiset({3: 1})).answer
    assert not ptas_decide(PathForest.of([3, 3]), RadiusMultiset({3: 1})).answer
    dec = ptas_decide(PathForest.of([5, 5]), RadiusMultiset({2: 2, 3: 1}), alpha=2, g=3)
    assert dec.answer
    used = sorted(r for rs in list(dec.short.values()) + list(dec.long.values()) for r in rs)
    assert used == [2, 2, 3]


def test_decide_long_paths():
    # alpha=1 sends the length-9 path to the greedy long-path stage
    dec = ptas_decide(PathForest.of([2, 9]), RadiusMultiset({5: 1, 2: 1}), alpha=1, g=5)
    assert dec.answer and dec.long == {1: (5,)} and dec.short == {0: (2,)}


def test_decide_rejects_bad_multiset():
    with pytest.raises(ValueError):
        ptas_decide(PathForest.of([3]), RadiusMultiset({1: 1, 3: 1}), g=4, k=2)


def test_materialize_completes():
    f = PathForest.of([3, 7, 20, 30])
    g = 11
    weak, _ = build_instances(g, 2)
    dec = ptas_decide(f, weak, g=g, k=2)
    assert dec.answer
    sched = materialize(f, dec, weak, g)
    out = simulate(expand_forest(f), sched)
    assert out.complete and out.completion_round <= g


def test_driver_examples():
    res = ptas_driver(PathForest.of([2, 2]), eps=1)
    assert 3 <= res.rounds <= 6
    assert ptas_driver(PathForest.of([1]), eps=Fraction(1, 3)).rounds == 1
    assert res.ratio_bound == 2 and res.info["k"] == 2


@pytest.mark.parametrize("eps", [Fraction(1, 3), Fraction(1, 4)])
def test_driver_small_eps(eps):
    f = PathForest.of([4, 9, 13, 17])
    res = ptas_driver(f, eps=eps)
    opt = path_dp(f).burning_number
    assert opt <= res.rounds <= (1 + eps) * opt + 1


def test_driver_bad_eps():
    with pytest.raises(ValueError):
        ptas_driver(PathForest.of([2]), eps=0)


def test_driver_smaller_eps_not_worse_on_sample():
    rng = random.Random(4)
    for _ in range(15):
        f = random_forest(rng.randint(1, 4), 1, 20, rng.randrange(10**6))
        opt = path_dp(f).burning_number
        res = ptas_driver(f, eps=Fraction(1, 2))
        assert opt <= res.rounds <= Fraction(3, 2) * opt
        assert res.opt_lower_bound is None or res.opt_lower_bound <= opt
