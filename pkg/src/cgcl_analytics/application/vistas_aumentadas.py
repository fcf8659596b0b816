"""Generación de vistas aumentadas por grafo y época."""
from collections.abc import Callable, Iterable, Sequence
from functools import partial

import numpy as np

from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.seeds import derive_seed
from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.services.augmentation import ControlPreservingAugmenter
from cgcl_analytics.domain.services.ctrl_embedding import ctrl_embedding, select_leaders_by_size
from cgcl_analytics.domain.services.pmi import PmiAnalyzer
from cgcl_analytics.domain.value_objects.augmentation import AugmentationSpec
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix

Mapper = Callable[[Callable, Iterable], Iterable]


def augmentation_leaders(graph: Graph, config: RunConfig, graph_index: int) -> LeaderConfig:
    """Líderes del backbone de un grafo (una configuración, fija entre épocas)."""
    policy = config.augmentation_policy()
    return select_leaders_by_size(graph, policy, graph_index)[policy.sizes[0]][0]


def augmentation_spec(
    config: RunConfig, epoch: int, graph_index: int, controlled: bool = True
) -> AugmentationSpec:
    stage_seed = config.seed if controlled else derive_seed(config.seed, "random-augment")
    return config.augmentation.spec_for(stage_seed, epoch, graph_index)


def augment_graph(
    item: tuple[int, Graph], config: RunConfig, epoch: int, controlled: bool = True
) -> Graph:
    """
    Vista aumentada de un grafo.

    ``controlled=True`` preserva δ con el backbone; ``False`` perturba
    aristas al azar (Random-CGCL).
    """
    index, graph = item
    spec = augmentation_spec(config, epoch, index, controlled)
    if not controlled:
        return ControlPreservingAugmenter.random_perturbation(graph, spec)
    augmenter = ControlPreservingAugmenter(PmiAnalyzer(config.pmi_exact_limit))
    return augmenter.augment(graph, augmentation_leaders(graph, config, index), spec)


def _embed_view(
    item: tuple[int, Graph], config: RunConfig, epoch: int, controlled: bool
) -> np.ndarray:
    index, graph = item
    view = augment_graph(item, config, epoch, controlled)
    return ctrl_embedding(view, config.leader_policy(), config.n_lap_eigs, graph_index=index).values


def make_augment_fn(
    graphs: Sequence[Graph],
    config: RunConfig,
    matrix: EmbeddingMatrix,
    controlled: bool = True,
    mapper: Mapper = map,
) -> Callable[[int], np.ndarray]:
    """
    Función época → embeddings CTRL estandarizados de las vistas aumentadas.

    Las vistas se estandarizan con los estadísticos del dataset original.
    """
    items = list(enumerate(graphs))

    def augment_fn(epoch: int) -> np.ndarray:
        embed = partial(_embed_view, config=config, epoch=epoch, controlled=controlled)
        values = np.vstack(list(mapper(embed, items)))
        values[~np.isfinite(values)] = 0.0
        return matrix.standardize(values)

    return augment_fn
