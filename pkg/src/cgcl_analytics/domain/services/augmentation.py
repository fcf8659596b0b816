"""Aumentaciones de grafos que preservan la cota de controlabilidad δ."""
import networkx as nx
import numpy as np

from cgcl_analytics.domain.entities.graph import Edge, Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import (
    AugmentationConsistencyError,
    ConfigurationError,
)
from cgcl_analytics.domain.services.graph_core import (
    all_pairs_distances,
    bfs_distances,
    bfs_parents,
    connected_components,
    to_networkx,
)
from cgcl_analytics.domain.services.pmi import PmiAnalyzer
from cgcl_analytics.domain.value_objects.augmentation import (
    AugmentationAudit,
    AugmentationKind,
    AugmentationSpec,
    Backbone,
    MaximalAdditionSet,
)


def _leader_distances(
    g: Graph, leaders: tuple[int, ...], targets: list[int]
) -> list[tuple[float, ...]]:
    rows = []
    for leader in leaders:
        dist = bfs_distances(g, leader)
        rows.append(tuple(dist[w] for w in targets))
    return rows


def _remove_non_bridges(
    g: Graph, candidates: list[Edge], k: int, rng: np.random.Generator
) -> tuple[Graph, int]:
    """Quita hasta k aristas de ``candidates`` en orden aleatorio sin romper conectividad."""
    if k <= 0 or not candidates:
        return g, 0
    work = to_networkx(g)
    removed = 0
    for idx in rng.permutation(len(candidates)):
        if removed >= k:
            break
        u, v = candidates[int(idx)]
        work.remove_edge(u, v)
        if nx.has_path(work, u, v):
            removed += 1
        else:
            work.add_edge(u, v)
    if removed == 0:
        return g, 0
    return g.with_edges(work.edges()), removed


class ControlPreservingAugmenter:
    """
    Eliminación, adición y sustitución de aristas con δ(G′) ≥ δ(G).

    Las distancias de cada líder a los nodos del testigo PMI (V_D) se
    mantienen exactamente iguales en el grafo aumentado.
    """

    def __init__(self, pmi: PmiAnalyzer | None = None):
        self.pmi = pmi or PmiAnalyzer()

    def backbone(
        self, g: Graph, lc: LeaderConfig, witness_nodes: frozenset[int] | None = None
    ) -> Backbone:
        """Un camino mínimo BFS por cada par (líder, nodo de V_D)."""
        if witness_nodes is None:
            witness_nodes = self.pmi.longest_pmi(g, lc).nodes
        edges: set[Edge] = set()
        for leader in lc.leaders:
            parent = bfs_parents(g, leader)
            for node in witness_nodes:
                current = node
                while parent[current] >= 0:
                    prev = parent[current]
                    edges.add((min(prev, current), max(prev, current)))
                    current = prev
        return Backbone(edges=frozenset(edges), witness_nodes=witness_nodes)

    # -- eliminación --------------------------------------------------------

    def delete_edges(
        self, g: Graph, lc: LeaderConfig, k: int, rng: np.random.Generator
    ) -> Graph:
        """Elimina hasta k aristas fuera del backbone que no sean puentes."""
        return self._delete(g, lc, k, rng)[0]

    def _delete(
        self,
        g: Graph,
        lc: LeaderConfig,
        k: int,
        rng: np.random.Generator,
        witness_nodes: frozenset[int] | None = None,
    ) -> tuple[Graph, int]:
        if k <= 0:
            return g, 0
        protected = self.backbone(g, lc, witness_nodes).edges
        potential = sorted(g.edges - protected)
        return _remove_non_bridges(g, potential, k, rng)

    def edge_deletion(self, g: Graph, lc: LeaderConfig, spec: AugmentationSpec) -> Graph:
        self._require(spec, AugmentationKind.DELETE)
        return self.delete_edges(g, lc, spec.k, np.random.default_rng(spec.seed))

    # -- adición ------------------------------------------------------------

    def maximal_addition_set(
        self, g: Graph, lc: LeaderConfig, witness_nodes: frozenset[int] | None = None
    ) -> MaximalAdditionSet:
        """
        No-aristas que pueden agregarse juntas sin cambiar d(ℓ, w), w ∈ V_D.

        Los candidatos se aceptan en orden lexicográfico; tras cada aceptación
        las distancias se actualizan con la arista nueva.

        Raises:
            AugmentationConsistencyError: si la verificación BFS final no coincide
        """
        lc.validate_for(g)
        if witness_nodes is None:
            witness_nodes = self.pmi.longest_pmi(g, lc).nodes
        non_edges = g.non_edges()
        if not witness_nodes:
            return MaximalAdditionSet(edges=tuple(non_edges))

        leaders = np.array(lc.leaders, dtype=np.int64)
        targets = np.array(sorted(witness_nodes), dtype=np.int64)
        dist = all_pairs_distances(g)
        reference = dist[np.ix_(leaders, targets)].copy()

        accepted: list[Edge] = []
        for a, b in non_edges:
            via_a = dist[leaders, a][:, None] + 1 + dist[b, targets][None, :]
            via_b = dist[leaders, b][:, None] + 1 + dist[a, targets][None, :]
            if not np.all(np.minimum(via_a, via_b) >= dist[np.ix_(leaders, targets)]):
                continue
            accepted.append((a, b))
            shortcut = np.minimum(
                dist[:, a][:, None] + 1 + dist[b, :][None, :],
                dist[:, b][:, None] + 1 + dist[a, :][None, :],
            )
            dist = np.minimum(dist, shortcut)

        augmented = g.with_edges(g.edges | set(accepted))
        for row, leader in enumerate(lc.leaders):
            after = bfs_distances(augmented, leader)
            if any(after[w] != reference[row, col] for col, w in enumerate(targets)):
                raise AugmentationConsistencyError(
                    f"Distancias desde el líder {leader} cambiaron tras agregar "
                    f"{len(accepted)} aristas"
                )
        return MaximalAdditionSet(edges=tuple(accepted))

    def add_edges(
        self,
        g: Graph,
        lc: LeaderConfig,
        k: int,
        rng: np.random.Generator,
        addable: MaximalAdditionSet | None = None,
    ) -> Graph:
        """Agrega min(k, |E_max|) aristas admisibles elegidas al azar."""
        if k <= 0:
            return g
        if addable is None:
            addable = self.maximal_addition_set(g, lc)
        if not len(addable):
            return g
        picks = rng.choice(len(addable), size=min(k, len(addable)), replace=False)
        return g.with_edges(g.edges | {addable.edges[int(i)] for i in picks})

    def edge_addition(self, g: Graph, lc: LeaderConfig, spec: AugmentationSpec) -> Graph:
        self._require(spec, AugmentationKind.ADD)
        return self.add_edges(g, lc, spec.k, np.random.default_rng(spec.seed))

    # -- sustitución ----------------------------------------------------------

    def edge_substitution(self, g: Graph, lc: LeaderConfig, spec: AugmentationSpec) -> Graph:
        """
        Elimina k′ aristas y agrega k′ aristas de E_max calculado sobre g.

        k′ = min(k, eliminables, agregables). Cada adición se verifica contra
        el grafo ya reducido y se descarta si altera alguna distancia de V_D;
        por cada adición descartada se restaura una arista eliminada.
        """
        self._require(spec, AugmentationKind.SUBSTITUTE)
        rng = np.random.default_rng(spec.seed)
        witness_nodes = self.pmi.longest_pmi(g, lc).nodes
        addable = self.maximal_addition_set(g, lc, witness_nodes)
        if not len(addable):
            return g

        reduced, removed = self._delete(g, lc, min(spec.k, len(addable)), rng, witness_nodes)
        if removed == 0:
            return g

        targets = sorted(witness_nodes)
        reference = _leader_distances(g, lc.leaders, targets)
        candidates = [e for e in addable.edges if e not in reduced.edges]
        edges = set(reduced.edges)
        added = 0
        for idx in rng.permutation(len(candidates)):
            if added >= removed:
                break
            trial = reduced.with_edges(edges | {candidates[int(idx)]})
            if _leader_distances(trial, lc.leaders, targets) == reference:
                edges.add(candidates[int(idx)])
                added += 1
        if added < removed:
            # Las aristas eliminadas vuelven sin alterar distancias: |E′| = |E|.
            edges |= set(sorted(g.edges - reduced.edges)[: removed - added])
        return reduced.with_edges(edges)

    # -- despacho -----------------------------------------------------------

    def augment(self, g: Graph, lc: LeaderConfig, spec: AugmentationSpec) -> Graph:
        """Aplica la aumentación indicada por ``spec.kind``."""
        if spec.kind is AugmentationKind.DELETE:
            return self.edge_deletion(g, lc, spec)
        if spec.kind is AugmentationKind.ADD:
            return self.edge_addition(g, lc, spec)
        return self.edge_substitution(g, lc, spec)

    @staticmethod
    def random_perturbation(g: Graph, spec: AugmentationSpec) -> Graph:
        """
        Perturbación uniforme sin restricción de controlabilidad.

        Elimina aristas que no sean puentes, agrega no-aristas cualesquiera, o
        ambas cosas en igual número para la sustitución.
        """
        rng = np.random.default_rng(spec.seed)
        non_edges = g.non_edges()
        if spec.kind is AugmentationKind.ADD:
            if not non_edges:
                return g
            picks = rng.choice(len(non_edges), size=min(spec.k, len(non_edges)), replace=False)
            return g.with_edges(g.edges | {non_edges[int(i)] for i in picks})

        if spec.kind is AugmentationKind.DELETE:
            return _remove_non_bridges(g, list(g.sorted_edges), spec.k, rng)[0]

        limit = min(spec.k, len(non_edges))
        reduced, removed = _remove_non_bridges(g, list(g.sorted_edges), limit, rng)
        if removed == 0:
            return g
        picks = rng.choice(len(non_edges), size=removed, replace=False)
        return reduced.with_edges(reduced.edges | {non_edges[int(i)] for i in picks})

    @staticmethod
    def edge_contract(g: Graph, g_aug: Graph, kind: str) -> bool:
        """
        Contrato de aristas por tipo.

        delete: E′ ⊆ E sin aumentar componentes; add: E ⊆ E′;
        substitute: |E′| = |E|. Otros tipos no tienen contrato.
        """
        if kind == AugmentationKind.DELETE.value:
            same_components = len(connected_components(g_aug)) == len(connected_components(g))
            return g_aug.edges <= g.edges and same_components
        if kind == AugmentationKind.ADD.value:
            return g.edges <= g_aug.edges
        if kind == AugmentationKind.SUBSTITUTE.value:
            return g_aug.num_edges == g.num_edges
        return True

    def audit_augmentation(
        self, g: Graph, g_aug: Graph, lc: LeaderConfig, kind: str = ""
    ) -> AugmentationAudit:
        """Compara δ, las distancias líder → V_D y el contrato de aristas de ``kind``."""
        before = self.pmi.longest_pmi(g, lc)
        after = self.pmi.longest_pmi(g_aug, lc)
        targets = sorted(before.nodes)
        preserved = _leader_distances(g, lc.leaders, targets) == _leader_distances(
            g_aug, lc.leaders, targets
        )
        return AugmentationAudit(
            kind=kind,
            edges_before=g.num_edges,
            edges_after=g_aug.num_edges,
            removed=len(g.edges - g_aug.edges),
            added=len(g_aug.edges - g.edges),
            delta_before=before.delta,
            delta_after=after.delta,
            exact=before.exact and after.exact,
            distances_preserved=preserved,
            edge_contract=self.edge_contract(g, g_aug, kind),
        )

    @staticmethod
    def _require(spec: AugmentationSpec, kind: AugmentationKind) -> None:
        if spec.kind is not kind:
            raise ConfigurationError(
                f"Se esperaba una aumentación '{kind.value}', llegó '{spec.kind.value}'"
            )
