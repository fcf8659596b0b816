"""Puerto (interfaz) para repositorio de datasets."""
from abc import ABC, abstractmethod
from pathlib import Path

from cgcl_analytics.domain.entities.dataset import Dataset


class DatasetRepository(ABC):
    """Interfaz para lectura y escritura de datasets de grafos."""

    @abstractmethod
    def load(self, name: str) -> Dataset:
        """Carga un dataset por nombre."""

    @abstractmethod
    def save(self, dataset: Dataset, directory: Path) -> list[Path]:
        """Escribe el dataset en ``directory`` y devuelve los archivos creados."""
