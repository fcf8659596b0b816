"""
Caso de uso: Calcular embeddings CTRL de un dataset.
Usa el cache si su huella coincide con la configuración.
"""
from cgcl_analytics.application.ports.embedding_store import EmbeddingStore
from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.vistas_aumentadas import Mapper
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.services.ctrl_embedding import embed_dataset
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.infrastructure.config.logging import logger


class CalcularEmbeddings:
    """Caso de uso para obtener la matriz CTRL de un dataset."""

    def __init__(self, store: EmbeddingStore | None = None, mapper: Mapper = map):
        self.store = store
        self.mapper = mapper

    def execute(
        self, dataset: Dataset, config: RunConfig, reuse_cache: bool = False
    ) -> EmbeddingMatrix:
        fingerprint = config.fingerprint()
        if reuse_cache and self.store is not None and self.store.exists():
            matrix, cached_fp = self.store.load()
            if cached_fp == fingerprint and matrix.values.shape[0] == len(dataset):
                logger.info(f"Embeddings tomados del cache (huella {fingerprint})")
                return matrix
            logger.info("Cache de embeddings con otra huella: se recalcula")

        logger.info("=" * 60)
        logger.info(f"EMBEDDINGS CTRL - {dataset.name} ({len(dataset)} grafos)")
        logger.info("=" * 60)
        try:
            matrix = embed_dataset(
                dataset.graphs, config.leader_policy(), config.n_lap_eigs, mapper=self.mapper
            )
            replaced = matrix.diagnostics.get("non_finite_replaced", 0)
            if replaced:
                logger.warning(f"{replaced} valores no finitos reemplazados por 0")
            logger.info(f"✅ Matriz {matrix.values.shape[0]}×{matrix.values.shape[1]}")
            if self.store is not None:
                self.store.save(matrix, fingerprint)
            return matrix
        except Exception as e:
            logger.error(f"❌ Error calculando embeddings: {e}", exc_info=True)
            raise
