"""
Preentrenamiento contrastivo del encoder CTRL.
Minibatches barajados con semilla, NT-Xent y SGD con momentum opcional.
"""
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
import torch

from cgcl_analytics.application.schemas import TrainConfig
from cgcl_analytics.domain.exceptions import InsufficientDataError, ShapeMismatchError
from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.ml.contrastive_loss import nt_xent_loss
from cgcl_analytics.infrastructure.ml.encoder import CtrlEncoder, init_params

AugmentFn = Callable[[int], np.ndarray]


@dataclass
class PretrainResult:
    params: EncoderParams
    loss_history: list[float] = field(default_factory=list)

    @property
    def final_loss(self) -> float:
        return self.loss_history[-1] if self.loss_history else float("nan")


class ContrastivePretrainer:
    """Entrena el encoder acercando cada grafo a su vista aumentada."""

    def __init__(self, config: TrainConfig):
        self.config = config

    def pretrain(
        self,
        x_orig: np.ndarray,
        augment_fn: AugmentFn,
        params: EncoderParams | None = None,
        resample: bool = True,
    ) -> PretrainResult:
        """
        Ejecuta ``config.epochs`` épocas.

        Args:
            x_orig: Embeddings CTRL estandarizados (n × d)
            augment_fn: Devuelve las vistas aumentadas estandarizadas de una época
            params: Parámetros iniciales (default: inicialización con ``config.seed``)
            resample: Si es False se reutilizan las vistas de la época 0

        Returns:
            Parámetros finales y pérdida media por época
        """
        cfg = self.config
        x_orig = np.asarray(x_orig, dtype=np.float64)
        if x_orig.ndim != 2 or x_orig.shape[0] == 0:
            raise InsufficientDataError("No hay embeddings para preentrenar")
        n, d = x_orig.shape
        if n < 2:
            raise InsufficientDataError(f"Se necesitan al menos 2 grafos (n={n})")

        if params is None:
            params = init_params(d, cfg.hidden_dim, cfg.proj_dim, cfg.seed, cfg.init)
        model = CtrlEncoder.from_params(params)
        optimizer = torch.optim.SGD(model.parameters(), lr=cfg.lr, momentum=cfg.momentum)
        shuffle_rng = np.random.default_rng(cfg.seed)

        logger.info(
            f"Preentrenando encoder: n={n}, d={d}, h={cfg.hidden_dim}, p={cfg.proj_dim}, "
            f"τ={cfg.tau}, batch={cfg.batch}, épocas={cfg.epochs}"
        )
        history: list[float] = []
        views: np.ndarray | None = None
        x_tensor = torch.from_numpy(x_orig)
        for epoch in range(cfg.epochs):
            if views is None or resample:
                views = np.asarray(augment_fn(epoch), dtype=np.float64)
                if views.shape != x_orig.shape:
                    raise ShapeMismatchError(
                        f"Vistas aumentadas con forma {views.shape}, se esperaba {x_orig.shape}"
                    )
            aug_tensor = torch.from_numpy(views)

            order = shuffle_rng.permutation(n)
            batch_losses = []
            model.train()
            for start in range(0, n, cfg.batch):
                idx = torch.from_numpy(order[start : start + cfg.batch])
                if idx.numel() < 2:
                    continue
                loss = nt_xent_loss(model(x_tensor[idx]), model(aug_tensor[idx]), cfg.tau)
                optimizer.zero_grad()
                loss.backward()
                optimizer.step()
                batch_losses.append(float(loss.item()))

            history.append(float(np.mean(batch_losses)))
            logger.info(f"Época {epoch + 1}/{cfg.epochs} - loss {history[-1]:.6f}")

        return PretrainResult(params=model.to_params(), loss_history=history)
