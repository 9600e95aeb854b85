from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from mycindex import build_graph, generate, parse_graph6

DATA_DIR = Path(__file__).parent / "data"
CORPUS_FILE = DATA_DIR / "connected_n2_to_n7.g6"
# unlabeled connected graph counts by order
CONNECTED_CLASS_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def path_graph(n):
    return generate("path", n)


def cycle_graph(n):
    return generate("cycle", n)


def star_graph(n):
    return generate("star", n)


def complete_graph(n):
    return generate("complete", n)


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on 2..7 vertices, one per isomorphism class."""
    graphs = [parse_graph6(line) for line in CORPUS_FILE.read_text().splitlines() if line]
    counts = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == CONNECTED_CLASS_COUNTS
    return graphs


@pytest.fixture(scope="session")
def corpus_small(corpus):
    """The 2..6 slice: 142 graphs, used by the acceptance criteria."""
    return [g for g in corpus if g.n <= 6]


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Arbitrary simple graphs with a boolean mask over all vertex pairs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Connected graphs: a random spanning tree plus a mask of extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    rest = [p for p in combinations(range(n), 2) if p not in edges]
    mask = draw(st.lists(st.booleans(), min_size=len(rest), max_size=len(rest)))
    edges.update(p for p, keep in zip(rest, mask) if keep)
    return build_graph(n, edges)
