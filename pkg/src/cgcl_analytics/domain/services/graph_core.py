"""Operaciones básicas sobre grafos: Laplaciana, partición, BFS y conectividad."""
import math
from collections import deque
from collections.abc import Sequence

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig, PartitionedLaplacian
from cgcl_analytics.domain.exceptions import InvalidGraphError, InvalidLeaderConfigError

INF = math.inf


def to_networkx(g: Graph) -> nx.Graph:
    """Grafo networkx con los nodos 0..n-1 (incluidos los aislados)."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.sorted_edges)
    return nx_graph


def laplacian(g: Graph) -> np.ndarray:
    """Laplaciana densa L = D - adj en orden de ids."""
    matrix = nx.laplacian_matrix(to_networkx(g), nodelist=range(g.n))
    return matrix.toarray().astype(np.float64)


def partition_laplacian(g: Graph, lc: LeaderConfig) -> PartitionedLaplacian:
    """
    Particiona la Laplaciana en bloques seguidores/líderes.

    Los seguidores quedan en orden ascendente y los líderes en el orden de ``lc``.
    """
    lc.validate_for(g)
    followers = lc.followers(g.n)
    leaders = lc.leaders
    lap = laplacian(g)
    f_idx = np.array(followers, dtype=np.int64)
    l_idx = np.array(leaders, dtype=np.int64)
    return PartitionedLaplacian(
        A=lap[np.ix_(f_idx, f_idx)],
        B=lap[np.ix_(f_idx, l_idx)],
        C=lap[np.ix_(l_idx, l_idx)],
        followers=followers,
        leaders=leaders,
    )


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distancias en saltos desde ``source``; ``math.inf`` para nodos inalcanzables."""
    if not 0 <= source < g.n:
        raise InvalidGraphError(f"Nodo origen {source} fuera de rango para n={g.n}")
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_parents(g: Graph, source: int) -> list[int]:
    """Padre de cada nodo en el árbol BFS desde ``source`` (-1 si no hay).

    Los vecinos se visitan en orden ascendente de id, así el árbol es determinista.
    """
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[source] = True
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                queue.append(v)
    return parent


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Matriz n×n de distancias en saltos (``np.inf`` si no hay camino)."""
    if g.num_edges == 0:
        dist = np.full((g.n, g.n), np.inf)
        np.fill_diagonal(dist, 0.0)
        return dist
    rows, cols = zip(*g.sorted_edges)
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    return shortest_path(adj, directed=False, unweighted=True)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Componentes conexas ordenadas por su nodo de menor id."""
    components = [frozenset(c) for c in nx.connected_components(to_networkx(g))]
    return sorted(components, key=min)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def check_leader_coverage(g: Graph, lc: LeaderConfig) -> None:
    """Exige al menos un líder por componente conexa."""
    lc.validate_for(g)
    leader_set = set(lc.leaders)
    uncovered = [min(c) for c in connected_components(g) if not c & leader_set]
    if uncovered:
        raise InvalidLeaderConfigError(
            f"Componentes sin líder (nodo representante): {uncovered}"
        )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Aplica la biyección ``perm`` (nodo i → perm[i]) a aristas y etiquetas."""
    perm = [int(p) for p in perm]
    if len(perm) != g.n or sorted(perm) != list(range(g.n)):
        raise InvalidGraphError(f"La permutación no es una biyección de 0..{g.n - 1}")

    node_labels = None
    if g.node_labels is not None:
        relabeled = [0] * g.n
        for old, new in enumerate(perm):
            relabeled[new] = g.node_labels[old]
        node_labels = tuple(relabeled)

    return Graph(
        n=g.n,
        edges=frozenset((perm[u], perm[v]) for u, v in g.edges),
        node_labels=node_labels,
        graph_label=g.graph_label,
    )
