import itertools
import math

import pytest

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import InexactPmiError, UnknownNodeError
from cgcl_analytics.domain.services.pmi import PmiAnalyzer
from cgcl_analytics.domain.value_objects.pmi import PmiSequence
from tests.conftest import complete_graph, cycle_graph, path_graph, star_graph

pmi = PmiAnalyzer()


def _brute_force_delta(dl: dict) -> int:
    """Longitud de la PMI más larga probando todas las permutaciones de subconjuntos."""
    nodes = sorted(dl)
    m = len(next(iter(dl.values()))) if dl else 0
    best = 0
    for size in range(1, len(nodes) + 1):
        for ordering in itertools.permutations(nodes, size):
            if _is_pmi_ordering([dl[v] for v in ordering], m):
                best = size
                break
    return best


def _is_pmi_ordering(vectors: list, m: int) -> bool:
    for i, x in enumerate(vectors):
        later = vectors[i + 1 :]
        if not any(all(x[c] < y[c] for y in later) for c in range(m)):
            return False
    return True


def test_dl_vectors_only_followers():
    dl = pmi.dl_vectors(path_graph(5), LeaderConfig((0, 4)))
    assert dl == {1: (1.0, 3.0), 2: (2.0, 2.0), 3: (3.0, 1.0)}


def test_dl_vectors_unreachable_is_inf():
    dl = pmi.dl_vectors(Graph(n=3, edges=[(0, 1)]), LeaderConfig((0,)))
    assert dl[1] == (1.0,)
    assert math.isinf(dl[2][0])


@pytest.mark.parametrize(
    "graph, leaders, delta",
    [
        (path_graph(3), (0,), 2),
        (path_graph(5), (0, 4), 3),
        (star_graph(3), (0,), 1),
        (star_graph(3), (1,), 2),
        (complete_graph(5), (0,), 1),
        (cycle_graph(4), (0,), 2),
        (path_graph(2), (0, 1), 0),
    ],
)
def test_longest_pmi_known_graphs(graph, leaders, delta):
    lc = LeaderConfig(leaders)
    result = pmi.longest_pmi(graph, lc)
    assert result.delta == delta
    assert result.exact
    assert pmi.is_valid_pmi(result.witness, pmi.dl_vectors(graph, lc))


def test_path_witness_is_ascending():
    result = pmi.longest_pmi(path_graph(4), LeaderConfig((0,)))
    assert result.witness == PmiSequence(nodes=(1, 2, 3), coords=(0, 0, 0))
    assert result.nodes == frozenset({1, 2, 3})


def test_is_valid_pmi():
    dl = {1: (1.0, 3.0), 2: (2.0, 2.0), 3: (3.0, 1.0)}
    assert pmi.is_valid_pmi(PmiSequence((1, 2, 3), (0, 0, 0)), dl)
    assert pmi.is_valid_pmi(PmiSequence((3, 2, 1), (1, 1, 1)), dl)
    assert not pmi.is_valid_pmi(PmiSequence((2, 1), (0, 0)), dl)
    assert not pmi.is_valid_pmi(PmiSequence((1, 1), (0, 0)), dl)
    assert pmi.is_valid_pmi(PmiSequence(), dl)


def test_is_valid_pmi_unknown_node():
    with pytest.raises(UnknownNodeError):
        pmi.is_valid_pmi(PmiSequence((9,), (0,)), {1: (1.0,)})


def test_exact_matches_brute_force(rng, graph_factory):
    for _ in range(200):
        n = int(rng.integers(3, 9))
        g = graph_factory(rng, n, float(rng.uniform(0.0, 0.5)))
        size = int(rng.integers(1, min(3, n - 1) + 1))
        lc = LeaderConfig(tuple(int(x) for x in rng.choice(n, size=size, replace=False)))
        dl = pmi.dl_vectors(g, lc)
        result = pmi.longest_pmi(g, lc)
        assert result.delta == _brute_force_delta(dl)
        assert pmi.is_valid_pmi(result.witness, dl)


def test_delta_bounded_by_gamma(rng, graph_factory):
    for _ in range(500):
        n = int(rng.integers(3, 21))
        g = graph_factory(rng, n, float(rng.uniform(0.0, 0.4)))
        size = int(rng.integers(1, 4))
        lc = LeaderConfig(tuple(int(x) for x in rng.choice(n, size=size, replace=False)))
        delta, gamma, holds = pmi.delta_leq_gamma_check(g, lc)
        assert holds, f"δ={delta} > γ={gamma}"


def test_greedy_is_valid_lower_bound(rng, graph_factory):
    greedy = PmiAnalyzer(exact_limit=0)
    for _ in range(60):
        n = int(rng.integers(4, 14))
        g = graph_factory(rng, n, 0.3)
        lc = LeaderConfig((0, n - 1))
        bound = greedy.longest_pmi(g, lc)
        assert not bound.exact
        assert pmi.is_valid_pmi(bound.witness, pmi.dl_vectors(g, lc))
        assert bound.delta <= pmi.longest_pmi(g, lc).delta


def test_check_requires_exact_regime():
    with pytest.raises(InexactPmiError):
        PmiAnalyzer(exact_limit=2).delta_leq_gamma_check(path_graph(6), LeaderConfig((0,)))


def test_result_is_deterministic(rng, graph_factory):
    g = graph_factory(rng, 12, 0.3)
    lc = LeaderConfig((3, 7))
    assert pmi.longest_pmi(g, lc) == pmi.longest_pmi(g, lc)
