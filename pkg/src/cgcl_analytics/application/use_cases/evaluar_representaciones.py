"""
Caso de uso: Evaluar representaciones con un clasificador lineal.
Baseline (CTRL estandarizado) o latentes de un encoder preentrenado.
"""
from pathlib import Path

import numpy as np

from cgcl_analytics.application.schemas import EvalProtocol
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.io.reports import write_eval_results
from cgcl_analytics.infrastructure.ml.encoder import encode_all
from cgcl_analytics.infrastructure.ml.evaluation import EvalReport, evaluate


class EvaluarRepresentaciones:
    """Caso de uso para el protocolo de evaluación lineal."""

    def execute(
        self,
        matrix: EmbeddingMatrix,
        labels: np.ndarray,
        protocol: EvalProtocol,
        dataset: str,
        method: str,
        fingerprint: str,
        params: EncoderParams | None = None,
        out_dir: Path | None = None,
    ) -> EvalReport:
        """
        Args:
            matrix: Embeddings CTRL del dataset
            labels: Clase de cada grafo
            protocol: Folds, tasa de etiquetas y repeticiones
            params: Encoder a aplicar; None evalúa el CTRL estandarizado

        Returns:
            EvalReport con la accuracy de cada fold
        """
        logger.info(f"Evaluando {method} en {dataset}")
        try:
            representations = matrix.standardize()
            if params is not None:
                representations = encode_all(params, representations)
            report = evaluate(representations, labels, protocol, dataset, method, fingerprint)
            if out_dir is not None:
                write_eval_results(out_dir, [report])
            return report
        except Exception as e:
            logger.error(f"❌ Error evaluando {method}: {e}", exc_info=True)
            raise
