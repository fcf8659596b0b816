"""Embedding CTRL: estadísticos del Gramiano sobre varias configuraciones de líderes."""
from collections.abc import Callable, Iterable, Sequence
from functools import partial

import numpy as np

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import InsufficientDataError
from cgcl_analytics.domain.services.controllability import ControllabilityAnalyzer
from cgcl_analytics.domain.services.graph_core import connected_components, laplacian
from cgcl_analytics.domain.value_objects.embedding import CtrlEmbedding, EmbeddingMatrix
from cgcl_analytics.domain.value_objects.leader_policy import LeaderPolicy, LeaderStrategy

METRICS = ("rank", "trace", "min_eig", "ld")
AGGREGATES = ("mean", "min", "max")
LAP_ZERO_RTOL = 1e-10

Mapper = Callable[[Callable, Iterable], Iterable]


def embedding_schema(policy: LeaderPolicy, n_lap_eigs: int = 8) -> tuple[str, ...]:
    """Nombres de features; d = 12·|sizes| + 2 + 2·n_lap_eigs."""
    names = [
        f"s{size}_{metric}_{agg}"
        for size in policy.sizes
        for metric in METRICS
        for agg in AGGREGATES
    ]
    names += ["num_nodes", "num_edges"]
    names += [f"lap_small_{i}" for i in range(n_lap_eigs)]
    names += [f"lap_large_{i}" for i in range(n_lap_eigs)]
    return tuple(names)


def _by_degree(nodes: Iterable[int], degrees: np.ndarray) -> list[int]:
    """Nodos por grado descendente; empates por id ascendente."""
    return sorted(nodes, key=lambda v: (-int(degrees[v]), v))


def select_leaders_by_size(
    g: Graph, policy: LeaderPolicy, graph_index: int = 0
) -> dict[int, list[LeaderConfig]]:
    """
    Configuraciones de líderes por tamaño pedido.

    El tamaño efectivo es min(s, max(1, n-1)). En grafos desconexos cada
    componente aporta primero su nodo de mayor grado, y el tamaño crece lo
    necesario para cubrirlas a todas. degree-ranked genera una sola
    configuración por tamaño.
    """
    degrees = g.degrees
    components = connected_components(g)
    required = (
        sorted(_by_degree(c, degrees)[0] for c in components) if len(components) > 1 else []
    )
    pool = [v for v in range(g.n) if v not in set(required)]

    configs: dict[int, list[LeaderConfig]] = {}
    for size in policy.sizes:
        effective = max(min(size, max(1, g.n - 1)), len(required))
        extra = effective - len(required)
        if policy.strategy is LeaderStrategy.DEGREE_RANKED:
            chosen = required + _by_degree(pool, degrees)[:extra]
            configs[size] = [LeaderConfig(tuple(chosen))]
            continue

        samples = []
        for r in range(policy.samples_per_size):
            rng = np.random.default_rng([policy.seed, graph_index, size, r])
            drawn = rng.choice(len(pool), size=extra, replace=False) if extra else []
            samples.append(LeaderConfig(tuple(required + [pool[int(i)] for i in drawn])))
        configs[size] = samples
    return configs


def select_leaders(g: Graph, policy: LeaderPolicy, graph_index: int = 0) -> list[LeaderConfig]:
    """Lista plana de configuraciones distintas, en orden de tamaño y de muestra."""
    seen: set[tuple[int, ...]] = set()
    unique: list[LeaderConfig] = []
    for configs in select_leaders_by_size(g, policy, graph_index).values():
        for lc in configs:
            if lc.leaders not in seen:
                seen.add(lc.leaders)
                unique.append(lc)
    return unique


def _laplacian_block(g: Graph, n_lap_eigs: int) -> np.ndarray:
    eigs = np.linalg.eigvalsh(laplacian(g))
    cutoff = LAP_ZERO_RTOL * max(1.0, float(eigs[-1]))
    smallest = eigs[eigs > cutoff][:n_lap_eigs]
    largest = eigs[::-1][:n_lap_eigs]
    block = np.zeros(2 * n_lap_eigs)
    block[: smallest.size] = smallest
    block[n_lap_eigs : n_lap_eigs + largest.size] = largest
    return block


def ctrl_embedding(
    g: Graph, policy: LeaderPolicy, n_lap_eigs: int = 8, graph_index: int = 0
) -> CtrlEmbedding:
    """Vector CTRL de dimensión fija para un grafo."""
    features: list[float] = []
    for configs in select_leaders_by_size(g, policy, graph_index).values():
        reports = [ControllabilityAnalyzer.gramian_report(g, lc) for lc in configs]
        table = np.array(
            [[r.normalized_rank, r.trace, r.min_nonzero_eig, r.ld] for r in reports],
            dtype=np.float64,
        )
        for column in table.T:
            features += [column.mean(), column.min(), column.max()]

    values = np.concatenate(
        [np.array(features), [float(g.n), float(g.num_edges)], _laplacian_block(g, n_lap_eigs)]
    )
    bad = ~np.isfinite(values)
    values[bad] = 0.0
    return CtrlEmbedding(
        values=values,
        schema=embedding_schema(policy, n_lap_eigs),
        non_finite_replaced=int(bad.sum()),
    )


def _embed_indexed(
    item: tuple[int, Graph], policy: LeaderPolicy, n_lap_eigs: int
) -> CtrlEmbedding:
    index, graph = item
    return ctrl_embedding(graph, policy, n_lap_eigs, graph_index=index)


def embed_dataset(
    graphs: Sequence[Graph],
    policy: LeaderPolicy,
    n_lap_eigs: int = 8,
    mapper: Mapper = map,
) -> EmbeddingMatrix:
    """
    Matriz de embeddings CTRL con media y desviación por feature.

    ``mapper`` permite repartir los grafos entre workers; el orden de filas
    siempre es el orden de ``graphs``.

    Raises:
        InsufficientDataError: si no hay grafos
    """
    if not graphs:
        raise InsufficientDataError("No hay grafos para embeber")

    embed_one = partial(_embed_indexed, policy=policy, n_lap_eigs=n_lap_eigs)
    embeddings = list(mapper(embed_one, list(enumerate(graphs))))
    values = np.vstack([e.values for e in embeddings])
    mean = values.mean(axis=0)
    std = values.std(axis=0)
    std[std == 0] = 1.0
    return EmbeddingMatrix(
        values=values,
        schema=embeddings[0].schema,
        mean=mean,
        std=std,
        diagnostics={"non_finite_replaced": sum(e.non_finite_replaced for e in embeddings)},
    )
