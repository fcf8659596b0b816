"""
Caso de uso: Aumentar un dataset preservando la controlabilidad.
Escribe el dataset aumentado y una auditoría de δ por grafo.
"""
from functools import partial
from pathlib import Path

from cgcl_analytics.application.ports.dataset_repository import DatasetRepository
from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.vistas_aumentadas import (
    Mapper,
    augment_graph,
    augmentation_leaders,
    augmentation_spec,
)
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.entities.graph import Graph
from cgcl_analytics.domain.exceptions import AuditFailedError
from cgcl_analytics.domain.services.augmentation import ControlPreservingAugmenter
from cgcl_analytics.domain.services.pmi import PmiAnalyzer
from cgcl_analytics.domain.value_objects.augmentation import AugmentationAudit
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.io.reports import write_audit


def _augment_and_audit(
    item: tuple[int, Graph], config: RunConfig
) -> tuple[Graph, AugmentationAudit]:
    index, graph = item
    augmented = augment_graph(item, config, epoch=0)
    augmenter = ControlPreservingAugmenter(PmiAnalyzer(config.pmi_exact_limit))
    audit = augmenter.audit_augmentation(
        graph,
        augmented,
        augmentation_leaders(graph, config, index),
        kind=augmentation_spec(config, 0, index).kind.value,
    )
    return augmented, audit


class AumentarDataset:
    """Caso de uso para generar y auditar un dataset aumentado."""

    def __init__(self, repository: DatasetRepository, mapper: Mapper = map):
        self.repository = repository
        self.mapper = mapper

    def execute(self, dataset: Dataset, config: RunConfig, out_dir: Path) -> dict:
        """
        Returns:
            Diccionario con el dataset ``augmented``, las ``audits`` y ``audit_path``

        Raises:
            AuditFailedError: si δ disminuyó en algún grafo del régimen exacto
        """
        fingerprint = config.fingerprint()
        logger.info("=" * 60)
        logger.info(f"AUMENTACIÓN DE {dataset.name} ({config.augmentation.kind})")
        logger.info("=" * 60)
        try:
            logger.info("[1/3] Aumentando grafos")
            results = list(
                self.mapper(partial(_augment_and_audit, config=config), enumerate(dataset.graphs))
            )
            graphs = tuple(graph for graph, _ in results)
            audits = [audit for _, audit in results]

            logger.info("[2/3] Escribiendo dataset aumentado")
            augmented = dataset.with_graphs(graphs)
            self.repository.save(augmented, Path(out_dir) / "augmented")

            logger.info("[3/3] Auditoría de δ")
            audit_path = write_audit(Path(out_dir) / "augment_audit.csv", audits, fingerprint)
            failed = [i for i, audit in enumerate(audits) if not audit.ok]
            removed = sum(a.removed for a in audits)
            added = sum(a.added for a in audits)
            logger.info(f"Aristas eliminadas: {removed}, agregadas: {added}")
            if failed:
                raise AuditFailedError(
                    "δ disminuyó, cambiaron distancias o falló el contrato de aristas "
                    f"en {len(failed)} grafos "
                    f"(primero: {failed[0]})"
                )
            logger.info(f"✅ Auditoría superada en {len(audits)} grafos")
            return {"augmented": augmented, "audits": audits, "audit_path": audit_path}
        except Exception as e:
            logger.error(f"❌ Error en la aumentación: {e}", exc_info=True)
            raise
