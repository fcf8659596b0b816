"""
Caso de uso: Preentrenar el encoder contrastivo sobre embeddings CTRL.
Guarda el checkpoint y la historia de pérdida.
"""
from pathlib import Path

from cgcl_analytics.application.ports.encoder_store import EncoderStore
from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.vistas_aumentadas import Mapper, make_augment_fn
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.io.reports import write_loss_history
from cgcl_analytics.infrastructure.ml.trainer import ContrastivePretrainer, PretrainResult


class PreentrenarEncoder:
    """Caso de uso para el preentrenamiento CGCL (o Random-CGCL)."""

    def __init__(self, store: EncoderStore | None = None, mapper: Mapper = map):
        self.store = store
        self.mapper = mapper

    def execute(
        self,
        dataset: Dataset,
        matrix: EmbeddingMatrix,
        config: RunConfig,
        controlled: bool = True,
        out_dir: Path | None = None,
        model_name: str = "encoder",
    ) -> PretrainResult:
        fingerprint = config.fingerprint()
        variant = "CGCL" if controlled else "Random-CGCL"
        logger.info("=" * 60)
        logger.info(f"PREENTRENAMIENTO {variant} - {dataset.name}")
        logger.info("=" * 60)
        try:
            augment_fn = make_augment_fn(
                dataset.graphs, config, matrix, controlled=controlled, mapper=self.mapper
            )
            result = ContrastivePretrainer(config.train).pretrain(
                matrix.standardize(),
                augment_fn,
                resample=config.augmentation.resample,
            )
            if self.store is not None:
                self.store.save_encoder(result.params, fingerprint, result.final_loss, model_name)
            if out_dir is not None:
                write_loss_history(
                    Path(out_dir) / "loss_history.csv", result.loss_history, fingerprint
                )
            logger.info(f"✅ Preentrenamiento terminado (loss final {result.final_loss:.6f})")
            return result
        except Exception as e:
            logger.error(f"❌ Error en el preentrenamiento: {e}", exc_info=True)
            raise
