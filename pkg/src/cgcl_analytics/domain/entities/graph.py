"""Entidades de grafo y partición líder-seguidor."""
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from cgcl_analytics.domain.exceptions import InvalidGraphError, InvalidLeaderConfigError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Arista no dirigida en forma canónica (menor, mayor)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Grafo simple no dirigido con nodos densos 0..n-1.

    ``edges`` acepta cualquier iterable de pares; se normaliza a un frozenset
    de pares (u, v) con u < v. Pares repetidos (incluido el recíproco) se
    rechazan: el parser de datasets es quien colapsa duplicados.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    node_labels: tuple[int, ...] | None = None
    graph_label: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidGraphError(f"El grafo necesita al menos un nodo (n={self.n})")

        normalized: list[Edge] = []
        for edge in self.edges:
            u, v = (int(x) for x in edge)
            if u == v:
                raise InvalidGraphError(f"Self-loop no permitido en el nodo {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"Arista ({u}, {v}) fuera de rango para n={self.n}")
            normalized.append(normalize_edge(u, v))

        edge_set = frozenset(normalized)
        if len(edge_set) != len(normalized):
            raise InvalidGraphError("Aristas duplicadas en la definición del grafo")
        object.__setattr__(self, "edges", edge_set)

        if self.node_labels is not None:
            labels = tuple(int(x) for x in self.node_labels)
            if len(labels) != self.n:
                raise InvalidGraphError(
                    f"node_labels tiene {len(labels)} entradas, se esperaban {self.n}"
                )
            object.__setattr__(self, "node_labels", labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """Aristas en orden lexicográfico."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Vecinos de cada nodo en orden ascendente de id."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nb)) for nb in neighbors)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(nb) for nb in self.adjacency], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def non_edges(self) -> list[Edge]:
        """Pares (u, v), u < v, que no son aristas, en orden lexicográfico."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        ]

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Copia del grafo con otro conjunto de aristas y las mismas etiquetas."""
        return Graph(
            n=self.n,
            edges=frozenset(normalize_edge(u, v) for u, v in edges),
            node_labels=self.node_labels,
            graph_label=self.graph_label,
        )


@dataclass(frozen=True)
class LeaderConfig:
    """
    Lista ordenada de líderes.

    El orden define las columnas de B y las coordenadas de los vectores DL.
    Los seguidores son el resto de nodos en orden ascendente de id.
    """

    leaders: tuple[int, ...]

    def __post_init__(self) -> None:
        leaders = tuple(int(x) for x in self.leaders)
        if not leaders:
            raise InvalidLeaderConfigError("El conjunto de líderes está vacío")
        if len(set(leaders)) != len(leaders):
            raise InvalidLeaderConfigError(f"Líderes repetidos: {leaders}")
        object.__setattr__(self, "leaders", leaders)

    @property
    def size(self) -> int:
        return len(self.leaders)

    def followers(self, n: int) -> tuple[int, ...]:
        leader_set = set(self.leaders)
        return tuple(i for i in range(n) if i not in leader_set)

    def validate_for(self, graph: Graph) -> None:
        """Verifica que todos los líderes existan en el grafo."""
        out_of_range = [x for x in self.leaders if not 0 <= x < graph.n]
        if out_of_range:
            raise InvalidLeaderConfigError(
                f"Líderes fuera de rango para n={graph.n}: {out_of_range}"
            )

    def mapped(self, perm: "tuple[int, ...] | list[int]") -> "LeaderConfig":
        """Líderes bajo una permutación de ids (mismo orden de coordenadas)."""
        return LeaderConfig(tuple(perm[x] for x in self.leaders))


@dataclass(frozen=True, eq=False)
class PartitionedLaplacian:
    """
    Bloques de la Laplaciana reordenada con seguidores primero.

    L = [[A, B], [Bᵀ, C]] bajo el orden ``followers + leaders``.
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    followers: tuple[int, ...]
    leaders: tuple[int, ...]

    @property
    def n_followers(self) -> int:
        return len(self.followers)

    @property
    def order(self) -> tuple[int, ...]:
        return self.followers + self.leaders

    def assemble(self) -> np.ndarray:
        """Reconstruye la Laplaciana en el orden original de nodos."""
        blocks = np.block([[self.A, self.B], [self.B.T, self.C]])
        order = np.array(self.order, dtype=np.int64)
        full = np.empty_like(blocks)
        full[np.ix_(order, order)] = blocks
        return full
