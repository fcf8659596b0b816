"""Value Objects de embeddings CTRL."""
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class CtrlEmbedding:
    """Vector CTRL de un grafo con el nombre de cada feature."""

    values: np.ndarray
    schema: tuple[str, ...]
    non_finite_replaced: int = 0

    @property
    def dimension(self) -> int:
        return len(self.schema)


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    """Matriz de embeddings del dataset con estadísticos de estandarización."""

    values: np.ndarray
    schema: tuple[str, ...]
    mean: np.ndarray
    std: np.ndarray
    diagnostics: dict[str, int] = field(default_factory=dict)

    def standardize(self, values: np.ndarray | None = None) -> np.ndarray:
        """Z-score con los estadísticos del dataset original.

        Features constantes (std 0) pasan centradas con std tratada como 1.
        """
        x = self.values if values is None else values
        return (x - self.mean) / self.std
