"""
Caso de uso: Ingerir un dataset TUDataset.
Parsea, valida y calcula los estadísticos del dataset.
"""
from cgcl_analytics.application.ports.dataset_repository import DatasetRepository
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.io.tudataset import dataset_statistics


class IngerirDataset:
    """Caso de uso para cargar un dataset y resumirlo."""

    def __init__(self, repository: DatasetRepository):
        self.repository = repository

    def execute(self, name: str) -> dict:
        """
        Returns:
            Diccionario con el ``dataset`` y sus ``stats``
        """
        logger.info("=" * 60)
        logger.info(f"INGESTA DEL DATASET {name}")
        logger.info("=" * 60)
        try:
            dataset = self.repository.load(name)
            stats = dataset_statistics(dataset)
            logger.info(
                f"✅ {stats['graphs']} grafos, {stats['classes']} clases, "
                f"|V| promedio {stats['avg_nodes']:.2f}, |E| promedio {stats['avg_edges']:.2f}"
            )
            return {"dataset": dataset, "stats": stats}
        except Exception as e:
            logger.error(f"❌ Error ingiriendo {name}: {e}", exc_info=True)
            raise
