"""Entidad de dataset de clasificación de grafos."""
from dataclasses import dataclass, field

import numpy as np

from cgcl_analytics.domain.entities.graph import Graph
from cgcl_analytics.domain.exceptions import InvalidGraphError


@dataclass(frozen=True)
class Dataset:
    """Colección de grafos etiquetados con clases remapeadas a 0..C-1."""

    name: str
    graphs: tuple[Graph, ...]
    num_classes: int
    label_names: tuple[int, ...] = ()
    diagnostics: dict[str, int] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        for index, graph in enumerate(self.graphs):
            if graph.graph_label is None or not 0 <= graph.graph_label < self.num_classes:
                raise InvalidGraphError(
                    f"Grafo {index} de '{self.name}' sin etiqueta válida "
                    f"en 0..{self.num_classes - 1}"
                )

    def __len__(self) -> int:
        return len(self.graphs)

    @property
    def labels(self) -> np.ndarray:
        """Etiqueta de clase de cada grafo, en orden."""
        return np.array([g.graph_label for g in self.graphs], dtype=np.int64)

    def with_graphs(self, graphs: tuple[Graph, ...], name: str | None = None) -> "Dataset":
        """Copia del dataset con otros grafos (mismo etiquetado)."""
        return Dataset(
            name=name or self.name,
            graphs=graphs,
            num_classes=self.num_classes,
            label_names=self.label_names,
        )
