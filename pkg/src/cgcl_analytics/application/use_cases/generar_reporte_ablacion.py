"""
Caso de uso: Comparar Baseline, Random-CGCL y CGCL.
Mismo protocolo de evaluación para las tres representaciones.
"""
from pathlib import Path

from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.use_cases.evaluar_representaciones import EvaluarRepresentaciones
from cgcl_analytics.application.use_cases.preentrenar_encoder import PreentrenarEncoder
from cgcl_analytics.application.vistas_aumentadas import Mapper
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.io.reports import ablation_table, write_ablation
from cgcl_analytics.infrastructure.ml.evaluation import EvalReport

METHODS = ("Baseline", "Random-CGCL", "CGCL")


class GenerarReporteAblacion:
    """Caso de uso para la tabla de ablación de aumentaciones."""

    def __init__(self, mapper: Mapper = map):
        self.pretrain = PreentrenarEncoder(mapper=mapper)
        self.evaluate = EvaluarRepresentaciones()

    def execute(
        self,
        dataset: Dataset,
        matrix: EmbeddingMatrix,
        config: RunConfig,
        out_dir: Path | None = None,
    ) -> dict:
        """
        Returns:
            Diccionario con los ``reports`` (orden Baseline, Random-CGCL, CGCL)
            y la ``table`` formateada
        """
        fingerprint = config.fingerprint()
        labels = dataset.labels
        logger.info("=" * 60)
        logger.info(f"REPORTE DE ABLACIÓN - {dataset.name}")
        logger.info("=" * 60)
        try:
            reports: list[EvalReport] = []

            logger.info("[1/3] Baseline")
            reports.append(
                self.evaluate.execute(
                    matrix, labels, config.eval, dataset.name, "Baseline", fingerprint
                )
            )

            for step, (method, controlled) in enumerate(
                (("Random-CGCL", False), ("CGCL", True)), start=2
            ):
                logger.info(f"[{step}/3] {method}")
                trained = self.pretrain.execute(dataset, matrix, config, controlled=controlled)
                reports.append(
                    self.evaluate.execute(
                        matrix,
                        labels,
                        config.eval,
                        dataset.name,
                        method,
                        fingerprint,
                        params=trained.params,
                    )
                )

            if out_dir is not None:
                write_ablation(Path(out_dir) / "ablation.csv", reports)
            table = ablation_table(reports)
            logger.info("✅ Reporte de ablación completo")
            return {"reports": reports, "table": table}
        except Exception as e:
            logger.error(f"❌ Error generando el reporte: {e}", exc_info=True)
            raise
