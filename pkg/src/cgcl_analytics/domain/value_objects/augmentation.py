"""Value Objects de aumentación de grafos."""
from dataclasses import dataclass
from enum import Enum

from cgcl_analytics.domain.entities.graph import Edge
from cgcl_analytics.domain.exceptions import ConfigurationError


class AugmentationKind(str, Enum):
    """Tipo de perturbación de aristas."""

    DELETE = "delete"
    ADD = "add"
    SUBSTITUTE = "substitute"

    @property
    def descripcion(self) -> str:
        descripciones = {
            self.DELETE: "Elimina aristas fuera del backbone",
            self.ADD: "Agrega aristas del conjunto maximal admisible",
            self.SUBSTITUTE: "Elimina k aristas y agrega k aristas admisibles",
        }
        return descripciones[self]


@dataclass(frozen=True)
class AugmentationSpec:
    """Perturbación de ``k`` aristas con semilla reproducible."""

    kind: AugmentationKind
    k: int
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", AugmentationKind(self.kind))
        if self.k < 1:
            raise ConfigurationError(f"k debe ser >= 1 (recibido {self.k})")


@dataclass(frozen=True)
class Backbone:
    """Aristas E_B que preservan las distancias líder → V_D."""

    edges: frozenset[Edge]
    witness_nodes: frozenset[int]


@dataclass(frozen=True)
class MaximalAdditionSet:
    """No-aristas admisibles para agregar sin alterar distancias líder → V_D."""

    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class AugmentationAudit:
    """Resultado de verificar una aumentación contra el grafo original."""

    kind: str
    edges_before: int
    edges_after: int
    removed: int
    added: int
    delta_before: int
    delta_after: int
    exact: bool
    distances_preserved: bool
    edge_contract: bool = True

    @property
    def ok(self) -> bool:
        """Contrato de aristas siempre; δ y distancias solo en régimen exacto."""
        if not self.edge_contract:
            return False
        if not self.exact:
            return True
        return self.delta_after >= self.delta_before and self.distances_preserved
