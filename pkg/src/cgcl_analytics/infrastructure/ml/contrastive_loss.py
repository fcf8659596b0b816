"""Pérdida contrastiva NT-Xent con negativos aumentados y denominador promediado."""
import math

import numpy as np
import torch
import torch.nn.functional as F

from cgcl_analytics.domain.exceptions import InsufficientDataError, ShapeMismatchError
from cgcl_analytics.infrastructure.config.logging import logger

NORM_EPS = 1e-12


def nt_xent_loss(z_orig: torch.Tensor, z_aug: torch.Tensor, tau: float = 0.5) -> torch.Tensor:
    """
    Pérdida media sobre el batch.

    Para cada i: -log[ exp(sim(z_i, z'_i)/τ) / ((1/(M-1)) Σ_{j≠i} exp(sim(z_i, z'_j)/τ)) ]
    con similitud coseno. Un vector nulo tiene similitud 0 con todo.

    Raises:
        InsufficientDataError: si M < 2
    """
    if z_orig.shape != z_aug.shape or z_orig.ndim != 2:
        raise ShapeMismatchError(
            f"Vistas con formas incompatibles: {tuple(z_orig.shape)} y {tuple(z_aug.shape)}"
        )
    m = z_orig.shape[0]
    if m < 2:
        raise InsufficientDataError(f"NT-Xent necesita al menos 2 pares (M={m})")

    zero_rows = int(
        (z_orig.detach().norm(dim=1) == 0).sum() + (z_aug.detach().norm(dim=1) == 0).sum()
    )
    if zero_rows:
        logger.warning(f"{zero_rows} vectores latentes nulos: similitud tratada como 0")

    zo = F.normalize(z_orig, dim=1, eps=NORM_EPS)
    za = F.normalize(z_aug, dim=1, eps=NORM_EPS)
    logits = zo @ za.T / tau
    positives = torch.diagonal(logits)
    eye = torch.eye(m, dtype=torch.bool, device=logits.device)
    negatives = torch.logsumexp(logits.masked_fill(eye, float("-inf")), dim=1)
    return (negatives - positives - math.log(m - 1)).mean()


def nt_xent_value_and_grad(
    z_orig: np.ndarray, z_aug: np.ndarray, tau: float = 0.5
) -> tuple[float, np.ndarray, np.ndarray]:
    """(pérdida, ∂/∂z_orig, ∂/∂z_aug) en float64."""
    zo = torch.tensor(np.asarray(z_orig, dtype=np.float64), requires_grad=True)
    za = torch.tensor(np.asarray(z_aug, dtype=np.float64), requires_grad=True)
    loss = nt_xent_loss(zo, za, tau)
    loss.backward()
    return float(loss.item()), zo.grad.numpy().copy(), za.grad.numpy().copy()
