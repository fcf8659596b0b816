import numpy as np
import pytest

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import ConfigurationError, InsufficientDataError
from cgcl_analytics.domain.services.ctrl_embedding import (
    ctrl_embedding,
    embed_dataset,
    embedding_schema,
    select_leaders,
    select_leaders_by_size,
)
from cgcl_analytics.domain.services.graph_core import relabel
from cgcl_analytics.domain.value_objects.leader_policy import LeaderPolicy, LeaderStrategy
from tests.conftest import complete_graph, path_graph, star_graph

DEGREE = LeaderStrategy.DEGREE_RANKED


def _feature(embedding, name: str) -> float:
    return float(embedding.values[embedding.schema.index(name)])


class TestLeaderSelection:
    def test_single_node_graph(self):
        configs = select_leaders(Graph(n=1), LeaderPolicy(sizes=(1, 2, 3)))
        assert configs == [LeaderConfig((0,))]

    def test_complete_graph_tie_goes_to_lowest_id(self):
        policy = LeaderPolicy(sizes=(1,), samples_per_size=1, strategy=DEGREE)
        assert select_leaders(complete_graph(3), policy) == [LeaderConfig((0,))]

    def test_path_picks_middle(self):
        policy = LeaderPolicy(sizes=(1,), samples_per_size=1, strategy=DEGREE)
        assert select_leaders(path_graph(3), policy) == [LeaderConfig((1,))]

    def test_sizes_clamped_to_n_minus_one(self):
        by_size = select_leaders_by_size(path_graph(3), LeaderPolicy(sizes=(1, 5)))
        assert all(lc.size == 2 for lc in by_size[5])

    def test_seeded_samples_are_reproducible(self, rng, graph_factory):
        g = graph_factory(rng, 15)
        policy = LeaderPolicy(sizes=(2, 3), samples_per_size=4, seed=11)
        first = select_leaders_by_size(g, policy, graph_index=3)
        assert first == select_leaders_by_size(g, policy, graph_index=3)
        assert len(first[2]) == 4
        assert first != select_leaders_by_size(g, policy, graph_index=4)

    def test_disconnected_graph_gets_leader_per_component(self):
        g = Graph(n=6, edges=[(0, 1), (1, 2), (3, 4), (4, 5)])
        for lc in select_leaders(g, LeaderPolicy(sizes=(1, 3), samples_per_size=3)):
            assert lc.size >= 2
            assert {1, 4} <= set(lc.leaders)

    def test_invalid_policy(self):
        with pytest.raises(ConfigurationError):
            LeaderPolicy(sizes=())
        with pytest.raises(ConfigurationError):
            LeaderPolicy(samples_per_size=0)

    @pytest.mark.parametrize("sizes", [(1, 1), (2, 3, 2)])
    def test_repeated_sizes_rejected(self, sizes):
        with pytest.raises(ConfigurationError, match="repetidos"):
            LeaderPolicy(sizes=sizes)


class TestCtrlEmbedding:
    @pytest.mark.parametrize("sizes, n_lap", [((1,), 0), ((1, 2, 3), 8), ((2, 4), 3)])
    def test_dimension_follows_schema(self, sizes, n_lap, rng, graph_factory):
        policy = LeaderPolicy(sizes=sizes, samples_per_size=2)
        for n in (1, 2, 7, 16):
            g = graph_factory(rng, n)
            embedding = ctrl_embedding(g, policy, n_lap)
            assert embedding.dimension == 12 * len(sizes) + 2 + 2 * n_lap
            assert embedding.values.shape == (embedding.dimension,)
            assert len(embedding_schema(policy, n_lap)) == embedding.values.size
            assert np.all(np.isfinite(embedding.values))

    def test_schema_names(self):
        schema = embedding_schema(LeaderPolicy(sizes=(1,)), n_lap_eigs=1)
        assert schema[:3] == ("s1_rank_mean", "s1_rank_min", "s1_rank_max")
        assert schema[-4:] == ("num_nodes", "num_edges", "lap_small_0", "lap_large_0")

    def test_k2_gramian_block(self):
        embedding = ctrl_embedding(path_graph(2), LeaderPolicy(sizes=(1,), samples_per_size=1))
        for agg in ("mean", "min", "max"):
            assert _feature(embedding, f"s1_rank_{agg}") == 1.0
            assert _feature(embedding, f"s1_trace_{agg}") == pytest.approx(0.5)

    def test_single_node_graph(self):
        embedding = ctrl_embedding(Graph(n=1), LeaderPolicy(sizes=(1, 2)), n_lap_eigs=2)
        assert np.all(embedding.values[:24] == 0.0)
        np.testing.assert_array_equal(embedding.values[24:], [1.0, 0.0, 0.0, 0.0, 0.0, 0.0])

    def test_laplacian_block_of_path(self):
        embedding = ctrl_embedding(path_graph(3), LeaderPolicy(sizes=(1,)), n_lap_eigs=3)
        small = [_feature(embedding, f"lap_small_{i}") for i in range(3)]
        large = [_feature(embedding, f"lap_large_{i}") for i in range(3)]
        np.testing.assert_allclose(small, [1.0, 3.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(large, [3.0, 1.0, 0.0], atol=1e-12)

    def test_disconnected_graph_is_finite(self):
        g = Graph(n=7, edges=[(0, 1), (2, 3), (3, 4)])
        embedding = ctrl_embedding(g, LeaderPolicy())
        assert np.all(np.isfinite(embedding.values))
        assert embedding.non_finite_replaced == 0

    def test_star_invariant_under_relabel(self, rng):
        policy = LeaderPolicy(sizes=(1,), samples_per_size=1, strategy=DEGREE)
        g = star_graph(5)
        h = relabel(g, [int(x) for x in rng.permutation(6)])
        np.testing.assert_allclose(
            ctrl_embedding(g, policy).values, ctrl_embedding(h, policy).values, atol=1e-10
        )


class TestEmbedDataset:
    def test_identical_graphs_give_identical_rows(self):
        g = path_graph(6)
        matrix = embed_dataset([g, g], LeaderPolicy(samples_per_size=2))
        np.testing.assert_array_equal(matrix.values[0], matrix.values[1])

    def test_standardization(self, rng, graph_factory):
        graphs = [graph_factory(rng, int(rng.integers(4, 12))) for _ in range(20)]
        matrix = embed_dataset(graphs, LeaderPolicy(samples_per_size=2), n_lap_eigs=4)
        z = matrix.standardize()
        varying = matrix.values.std(axis=0) > 0
        np.testing.assert_allclose(z.mean(axis=0), 0.0, atol=1e-10)
        np.testing.assert_allclose(z[:, varying].std(axis=0), 1.0, atol=1e-8)
        assert np.all(matrix.std > 0)

    def test_rows_follow_input_order(self, rng, graph_factory):
        graphs = [graph_factory(rng, n) for n in (4, 9, 6)]
        policy = LeaderPolicy(samples_per_size=2)
        matrix = embed_dataset(graphs, policy)
        for index, g in enumerate(graphs):
            np.testing.assert_array_equal(
                matrix.values[index], ctrl_embedding(g, policy, graph_index=index).values
            )

    def test_empty_dataset(self):
        with pytest.raises(InsufficientDataError):
            embed_dataset([], LeaderPolicy())
