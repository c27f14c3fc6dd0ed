import random

import pytest

from graphburn.graph import Graph
from graphburn.generators import random_tree


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_connected(n: int, rng: random.Random) -> Graph:
    """Random spanning tree plus a random number of extra edges."""
    tree = random_tree(n, rng.randrange(2**32))
    edges = set(tree.edges())
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(pairs)
    edges.update(pairs[: rng.randint(0, len(pairs))])
    return Graph.from_edges(n, sorted(edges))


# lit in order 0, 4, 5: vertex 5 is the only one still cold when round 3 starts
THREE_ROUND_EDGES = [(0, 1), (0, 2), (1, 3), (3, 4), (3, 5), (4, 6)]
FIRST, SECOND, LAST = 0, 4, 5

# tree rooted at 0 whose guess-2 run picks centers 3 then 1 and fails
SPLIT_TREE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (6, 7), (0, 8), (8, 9), (0, 10), (10, 11)]


@pytest.fixture
def path9() -> Graph:
    return path_graph(9)
