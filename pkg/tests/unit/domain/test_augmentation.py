import numpy as np
import pytest

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import ConfigurationError
from cgcl_analytics.domain.services.augmentation import ControlPreservingAugmenter
from cgcl_analytics.domain.services.graph_core import bfs_distances, is_connected
from cgcl_analytics.domain.services.pmi import PmiAnalyzer
from cgcl_analytics.domain.value_objects.augmentation import (
    AugmentationAudit,
    AugmentationKind,
    AugmentationSpec,
)
from tests.conftest import complete_graph, cycle_graph, path_graph, random_tree

augmenter = ControlPreservingAugmenter()


def _distances(g: Graph, lc: LeaderConfig, nodes) -> list:
    return [[bfs_distances(g, leader)[w] for w in sorted(nodes)] for leader in lc.leaders]


def _random_case(rng, graph_factory):
    n = int(rng.integers(4, 13))
    g = graph_factory(rng, n, float(rng.uniform(0.1, 0.5)))
    size = int(rng.integers(1, 4))
    lc = LeaderConfig(tuple(int(x) for x in rng.choice(n, size=size, replace=False)))
    return g, lc


class TestBackbone:
    def test_path_backbone_is_whole_path(self):
        g = path_graph(5)
        backbone = augmenter.backbone(g, LeaderConfig((0,)))
        assert backbone.edges == g.edges
        assert backbone.witness_nodes == frozenset({1, 2, 3, 4})

    def test_backbone_keeps_witness_distances(self, rng, graph_factory):
        for _ in range(30):
            g, lc = _random_case(rng, graph_factory)
            backbone = augmenter.backbone(g, lc)
            assert backbone.edges <= g.edges
            reduced = g.with_edges(backbone.edges)
            nodes = backbone.witness_nodes
            assert _distances(reduced, lc, nodes) == _distances(g, lc, nodes)


class TestDeletion:
    def test_tree_has_nothing_to_delete(self, rng):
        for _ in range(10):
            tree = random_tree(rng, int(rng.integers(3, 15)))
            spec = AugmentationSpec(AugmentationKind.DELETE, k=3, seed=1)
            assert augmenter.edge_deletion(tree, LeaderConfig((0,)), spec) == tree

    def test_deletion_contract(self, rng, graph_factory):
        for seed in range(500):
            g, lc = _random_case(rng, graph_factory)
            k = int(rng.integers(1, 4))
            g_aug = augmenter.edge_deletion(g, lc, AugmentationSpec("delete", k, seed))
            assert g_aug.edges <= g.edges
            assert g.num_edges - g_aug.num_edges <= k
            assert is_connected(g_aug)
            audit = augmenter.audit_augmentation(g, g_aug, lc, "delete")
            assert audit.ok and audit.distances_preserved and audit.edge_contract
            assert audit.delta_after >= audit.delta_before

    def test_cycle_deletes_outside_backbone(self):
        g = cycle_graph(6)
        lc = LeaderConfig((0,))
        g_aug = augmenter.edge_deletion(g, lc, AugmentationSpec("delete", 1, 0))
        assert g_aug.num_edges == g.num_edges - 1


class TestAddition:
    def test_maximal_set_preserves_distances(self, rng, graph_factory):
        for _ in range(30):
            g, lc = _random_case(rng, graph_factory)
            nodes = PmiAnalyzer().longest_pmi(g, lc).nodes
            addable = augmenter.maximal_addition_set(g, lc)
            assert set(addable.edges).isdisjoint(g.edges)
            full = g.with_edges(g.edges | set(addable.edges))
            assert _distances(full, lc, nodes) == _distances(g, lc, nodes)

    def test_maximal_set_is_maximal(self, rng, graph_factory):
        for _ in range(20):
            g, lc = _random_case(rng, graph_factory)
            nodes = PmiAnalyzer().longest_pmi(g, lc).nodes
            addable = augmenter.maximal_addition_set(g, lc)
            full = g.with_edges(g.edges | set(addable.edges))
            reference = _distances(g, lc, nodes)
            for edge in full.non_edges():
                bigger = full.with_edges(full.edges | {edge})
                assert _distances(bigger, lc, nodes) != reference

    def test_complete_graph_has_no_additions(self):
        g = complete_graph(5)
        lc = LeaderConfig((0,))
        assert len(augmenter.maximal_addition_set(g, lc)) == 0
        assert augmenter.edge_addition(g, lc, AugmentationSpec("add", 2, 0)) == g

    def test_addition_contract(self, rng, graph_factory):
        for seed in range(500):
            g, lc = _random_case(rng, graph_factory)
            k = int(rng.integers(1, 4))
            available = len(augmenter.maximal_addition_set(g, lc))
            g_aug = augmenter.edge_addition(g, lc, AugmentationSpec("add", k, seed))
            assert g.edges <= g_aug.edges
            assert g_aug.num_edges - g.num_edges == min(k, available)
            audit = augmenter.audit_augmentation(g, g_aug, lc, "add")
            assert audit.ok and audit.edge_contract
            assert audit.delta_after >= audit.delta_before


class TestSubstitution:
    def test_substitution_contract(self, rng, graph_factory):
        for seed in range(500):
            g, lc = _random_case(rng, graph_factory)
            k = int(rng.integers(1, 4))
            g_aug = augmenter.edge_substitution(g, lc, AugmentationSpec("substitute", k, seed))
            audit = augmenter.audit_augmentation(g, g_aug, lc, "substitute")
            assert g_aug.num_edges == g.num_edges
            assert audit.added == audit.removed <= k
            assert audit.ok and audit.distances_preserved and audit.edge_contract
            assert audit.delta_after >= audit.delta_before

    def test_dispatch_is_deterministic(self, rng, graph_factory):
        g, lc = _random_case(rng, graph_factory)
        for kind in AugmentationKind:
            spec = AugmentationSpec(kind, 2, 99)
            assert augmenter.augment(g, lc, spec) == augmenter.augment(g, lc, spec)

    def test_kind_mismatch(self):
        with pytest.raises(ConfigurationError):
            augmenter.edge_deletion(
                path_graph(3), LeaderConfig((0,)), AugmentationSpec("add", 1, 0)
            )


class TestRandomPerturbation:
    def test_random_delete_keeps_connectivity(self, rng, graph_factory):
        for seed in range(20):
            g = graph_factory(rng, 10, 0.4)
            g_aug = ControlPreservingAugmenter.random_perturbation(
                g, AugmentationSpec("delete", 3, seed)
            )
            assert g_aug.edges <= g.edges
            assert is_connected(g_aug)

    def test_random_add_count(self, rng, graph_factory):
        g = graph_factory(rng, 8, 0.2)
        g_aug = ControlPreservingAugmenter.random_perturbation(g, AugmentationSpec("add", 3, 5))
        assert g_aug.num_edges == g.num_edges + min(3, len(g.non_edges()))

    def test_random_substitute_keeps_edge_count(self, rng, graph_factory):
        g = graph_factory(rng, 9, 0.3)
        g_aug = ControlPreservingAugmenter.random_perturbation(
            g, AugmentationSpec("substitute", 2, 3)
        )
        assert g_aug.num_edges == g.num_edges
        assert is_connected(g_aug)


def test_spec_rejects_k_zero():
    with pytest.raises(ConfigurationError):
        AugmentationSpec(AugmentationKind.ADD, k=0, seed=0)


def test_audit_ok_ignores_inexact_regime():
    audit = AugmentationAudit(
        kind="delete",
        edges_before=5,
        edges_after=4,
        removed=1,
        added=0,
        delta_before=3,
        delta_after=2,
        exact=False,
        distances_preserved=True,
    )
    assert audit.ok
    exact_audit = AugmentationAudit(**{**audit.__dict__, "exact": True})
    assert not exact_audit.ok
    broken = AugmentationAudit(**{**audit.__dict__, "delta_after": 3, "edge_contract": False})
    assert not broken.ok


class TestEdgeContract:
    def test_delete_rejects_new_edges(self):
        g = cycle_graph(5)
        grown = g.with_edges(g.edges | {(0, 2)})
        assert not augmenter.edge_contract(g, grown, "delete")
        assert augmenter.edge_contract(g, g.with_edges(g.edges - {(0, 1)}), "delete")

    def test_delete_rejects_disconnection(self):
        g = path_graph(4)
        split = g.with_edges(g.edges - {(1, 2)})
        assert not augmenter.edge_contract(g, split, "delete")
        audit = augmenter.audit_augmentation(g, split, LeaderConfig((0,)), "delete")
        assert not audit.edge_contract
        assert not audit.ok

    def test_add_rejects_removed_edges(self):
        g = cycle_graph(5)
        swapped = g.with_edges((g.edges - {(0, 1)}) | {(0, 2)})
        assert not augmenter.edge_contract(g, swapped, "add")
        assert augmenter.edge_contract(g, g.with_edges(g.edges | {(0, 2)}), "add")

    def test_substitute_requires_same_edge_count(self):
        g = cycle_graph(5)
        swapped = g.with_edges((g.edges - {(0, 1)}) | {(0, 2)})
        assert augmenter.edge_contract(g, swapped, "substitute")
        assert not augmenter.edge_contract(g, g.with_edges(g.edges - {(0, 1)}), "substitute")
        audit = augmenter.audit_augmentation(
            g, g.with_edges(g.edges | {(0, 2)}), LeaderConfig((0,)), "substitute"
        )
        assert not audit.ok

    def test_unknown_kind_has_no_contract(self):
        g = path_graph(3)
        assert augmenter.edge_contract(g, g.with_edges({(0, 2)}), "")


def test_spec_seed_controls_outcome():
    g = complete_graph(6).with_edges(complete_graph(6).edges - {(0, 1), (2, 3), (4, 5)})
    lc = LeaderConfig((0,))
    outcomes = {
        augmenter.edge_deletion(g, lc, AugmentationSpec("delete", 2, seed)).edges
        for seed in range(10)
    }
    assert len(outcomes) > 1
    assert np.all([len(o) == g.num_edges - 2 for o in outcomes])
