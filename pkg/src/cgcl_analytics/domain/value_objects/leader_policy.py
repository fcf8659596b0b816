"""Value Object de política de selección de líderes."""
from dataclasses import dataclass
from enum import Enum

from cgcl_analytics.domain.exceptions import ConfigurationError


class LeaderStrategy(str, Enum):
    """Estrategia para elegir nodos líderes."""

    SEEDED_RANDOM = "seeded-random"
    DEGREE_RANKED = "degree-ranked"


@dataclass(frozen=True)
class LeaderPolicy:
    """Tamaños de conjuntos de líderes y cantidad de muestras por tamaño."""

    sizes: tuple[int, ...] = (1, 2, 3)
    samples_per_size: int = 5
    seed: int = 0
    strategy: LeaderStrategy = LeaderStrategy.SEEDED_RANDOM

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ConfigurationError(f"Tamaños de líderes inválidos: {self.sizes}")
        if len(set(sizes)) != len(sizes):
            raise ConfigurationError(f"Tamaños de líderes repetidos: {self.sizes}")
        if self.samples_per_size < 1:
            raise ConfigurationError("samples_per_size debe ser >= 1")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "strategy", LeaderStrategy(self.strategy))
