import random

import pytest

from conftest import complete_graph, random_connected
from graphburn.approx import approx3, burn_guess, find_min_accepting, vertex_order
from graphburn.generators import gadget, gadget_landmarks, tight_gadget
from graphburn.graph import Graph, bfs_distances
from graphburn.schedule import simulate, verify_certificate


def test_k5_guess2(path9):
    res = burn_guess(complete_graph(5), 2)
    assert res.accepted and res.centers == (0,)
    assert simulate(complete_graph(5), res.centers).completion_round == 2


def test_guess1_always_bad():
    res = burn_guess(complete_graph(3), 1)
    assert not res.accepted and res.certificate.witnesses == (0,)


def test_path9_guess3(path9):
    res = burn_guess(path9, 3)
    assert res.accepted and res.centers == (0, 5)
    assert simulate(path9, res.centers).completion_round == 5


def test_single_vertex():
    res = approx3(Graph.from_edges(1, []))
    assert res.guess == 2 and res.rounds == 1 and res.opt_lower_bound == 1


def test_path9_driver(path9):
    res = approx3(path9)
    assert res.guess == 3 and res.rounds == 5 and res.opt_lower_bound == 2
    assert verify_certificate(path9, res.certificate)


def test_empty_graph():
    res = approx3(Graph.from_edges(0, []))
    assert res.rounds == 0 and len(res.schedule) == 0


def test_bad_order_rejected(path9):
    with pytest.raises(ValueError):
        burn_guess(path9, 2, [0, 1])


def _audit(g, res):
    if res.accepted:
        assert len(res.centers) <= res.guess - 1
        for v in range(g.n):
            assert any(bfs_distances(g, c, 2 * res.guess - 2).get(v) is not None for c in res.centers)
    else:
        assert len(res.centers) == res.guess
        assert verify_certificate(g, res.certificate)


def test_guess_outcome_invariants():
    rng = random.Random(7)
    for _ in range(150):
        g = random_connected(rng.randint(1, 12), rng)
        order = vertex_order(g.n, rng.randrange(1000))
        for guess in range(1, 5):
            _audit(g, burn_guess(g, guess, order))


def test_binary_and_linear_agree():
    rng = random.Random(3)
    for _ in range(100):
        g = random_connected(rng.randint(1, 15), rng)
        a, b = approx3(g, "binary"), approx3(g, "linear")
        assert a.guess == b.guess and a.rounds == b.rounds


def test_find_min_accepting_falls_back_on_nonmonotone():
    class R:
        def __init__(self, ok):
            self.accepted = ok

    pattern = {1: False, 2: True, 3: False, 4: True}
    g, _ = find_min_accepting(lambda x: R(pattern.get(x, True)), 1, 8)
    assert g == 2
    g, _ = find_min_accepting(lambda x: R(x >= 6), 1, 8, "binary")
    assert g == 6


def _tip_first(g, tips):
    return tips + [v for v in range(g.n) if v not in set(tips)]


@pytest.mark.parametrize("k", range(3, 9))
def test_tight_gadget_ratio(k):
    g = tight_gadget(k)
    lm = gadget_landmarks(k, k + 1, 2 * k)
    res = approx3(g, order=_tip_first(g, lm["tips"]))
    assert res.guess == k + 1 and len(res.schedule) == k
    assert res.rounds == 3 * k
    hand = simulate(g, [lm["hub"], lm["tail_middle"]])
    assert hand.complete and hand.completion_round == k + 2


@pytest.mark.parametrize("k", range(3, 9))
def test_plain_gadget_tip_first(k):
    g = gadget(k)
    lm = gadget_landmarks(k)
    res = approx3(g, order=_tip_first(g, lm["tips"]))
    assert res.guess == k + 1 and len(res.schedule) == 2
    assert res.rounds == 2 * k + 1
    assert simulate(g, [lm["hub"], lm["tail_middle"]]).completion_round == k + 1
