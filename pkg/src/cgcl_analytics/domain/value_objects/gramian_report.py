"""Value Objects de controlabilidad."""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class GramianReport:
    """
    Gramiano de controlabilidad de horizonte infinito y sus estadísticos.

    ``eigenvalues`` está ordenado de mayor a menor. ``rank``, ``min_nonzero_eig``,
    ``ld`` y ``avg_energy`` solo consideran autovalores sobre ``threshold``.
    """

    W: np.ndarray
    eigenvalues: np.ndarray
    rank: int
    trace: float
    min_nonzero_eig: float
    ld: float
    avg_energy: float
    threshold: float

    @property
    def n_followers(self) -> int:
        return int(self.W.shape[0])

    @property
    def normalized_rank(self) -> float:
        """rank / N_f; 0 cuando no hay seguidores."""
        if self.n_followers == 0:
            return 0.0
        return self.rank / self.n_followers


@dataclass(frozen=True)
class ControllabilityRank:
    """Dimensión γ del subespacio controlable."""

    gamma: int
    n_followers: int
