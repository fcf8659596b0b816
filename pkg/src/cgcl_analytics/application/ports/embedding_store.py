"""Puerto (interfaz) para persistencia de embeddings."""
from abc import ABC, abstractmethod
from pathlib import Path

from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix


class EmbeddingStore(ABC):
    """Interfaz para guardar y recuperar matrices de embeddings CTRL."""

    @abstractmethod
    def save(self, matrix: EmbeddingMatrix, fingerprint: str) -> Path:
        """Guarda la matriz y sus estadísticos de estandarización."""

    @abstractmethod
    def load(self) -> tuple[EmbeddingMatrix, str]:
        """Devuelve (matriz, huella) del cache."""

    @abstractmethod
    def exists(self) -> bool:
        """True si el cache está completo."""
