"""Value Objects de secuencias pseudo-monótonamente crecientes (PMI)."""
from dataclasses import dataclass

# Distancias salto a salto desde cada líder; math.inf si no hay camino.
DlVector = tuple[float, ...]


@dataclass(frozen=True)
class PmiSequence:
    """
    Secuencia de nodos con la coordenada π(i) que certifica cada posición.

    ``coords`` usa índices 0-based sobre la lista de líderes.
    """

    nodes: tuple[int, ...] = ()
    coords: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.coords):
            raise ValueError("nodes y coords deben tener la misma longitud")

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class DeltaBound:
    """Longitud δ de la PMI más larga con un testigo.

    ``exact`` es False cuando δ proviene de la cota voraz (solo cota inferior).
    """

    delta: int
    witness: PmiSequence
    exact: bool

    @property
    def nodes(self) -> frozenset[int]:
        """Conjunto V_D de nodos del testigo."""
        return frozenset(self.witness.nodes)
