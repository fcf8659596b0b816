"""Servicio de dominio para vectores DL y secuencias PMI."""
import math
from collections.abc import Mapping

import numpy as np

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import InexactPmiError, UnknownNodeError
from cgcl_analytics.domain.services.controllability import ControllabilityAnalyzer
from cgcl_analytics.domain.services.graph_core import bfs_distances
from cgcl_analytics.domain.value_objects.pmi import DeltaBound, DlVector, PmiSequence

Candidate = tuple[DlVector, int]


class PmiAnalyzer:
    """
    Cota inferior δ de la dimensión controlable vía secuencias PMI.

    Solo se consideran seguidores. Hasta ``exact_limit`` seguidores la
    secuencia más larga es exacta; por encima se usa una cota voraz.
    """

    def __init__(self, exact_limit: int = 64):
        self.exact_limit = exact_limit

    @staticmethod
    def dl_vectors(g: Graph, lc: LeaderConfig) -> dict[int, DlVector]:
        """Vector de distancias a cada líder, en el orden de ``lc``, por seguidor."""
        lc.validate_for(g)
        per_leader = [bfs_distances(g, leader) for leader in lc.leaders]
        return {
            node: tuple(float(dist[node]) for dist in per_leader)
            for node in lc.followers(g.n)
        }

    @staticmethod
    def is_valid_pmi(seq: PmiSequence, dl: Mapping[int, DlVector]) -> bool:
        """True si cada posición i es estrictamente menor en π(i) que todas las siguientes."""
        missing = [node for node in seq.nodes if node not in dl]
        if missing:
            raise UnknownNodeError(f"Nodos sin vector DL: {missing}")
        if len(set(seq.nodes)) != len(seq.nodes):
            return False

        vectors = [dl[node] for node in seq.nodes]
        for i, coord in enumerate(seq.coords):
            if not 0 <= coord < len(vectors[i]):
                return False
            pivot = vectors[i][coord]
            if any(not pivot < later[coord] for later in vectors[i + 1 :]):
                return False
        return True

    @staticmethod
    def _candidates(dl: Mapping[int, DlVector]) -> list[Candidate]:
        """Vectores finitos en alguna coordenada, sin repetidos (gana el menor id)."""
        by_vector: dict[DlVector, int] = {}
        for node in sorted(dl):
            vector = dl[node]
            if all(math.isinf(x) for x in vector):
                continue
            by_vector.setdefault(vector, node)
        return sorted((vector, node) for vector, node in by_vector.items())

    @staticmethod
    def _first_smaller(x: DlVector, bound: DlVector) -> int:
        for c, (xc, bc) in enumerate(zip(x, bound)):
            if xc < bc:
                return c
        return -1

    def _exact(self, candidates: list[Candidate], m: int) -> PmiSequence:
        # La secuencia se arma desde el final: el estado es el mínimo
        # coordenada a coordenada del sufijo ya elegido.
        memo: dict[DlVector, tuple[int, int]] = {}

        def best(bound: DlVector) -> int:
            if bound in memo:
                return memo[bound][0]
            usable = [
                i for i, (x, _) in enumerate(candidates) if self._first_smaller(x, bound) >= 0
            ]
            length, choice = 0, -1
            for i in usable:
                if length >= len(usable):
                    break
                x = candidates[i][0]
                value = 1 + best(tuple(min(a, b) for a, b in zip(bound, x)))
                if value > length:
                    length, choice = value, i
            memo[bound] = (length, choice)
            return length

        bound: DlVector = (math.inf,) * m
        best(bound)
        nodes: list[int] = []
        coords: list[int] = []
        while memo[bound][1] >= 0:
            x, node = candidates[memo[bound][1]]
            nodes.append(node)
            coords.append(self._first_smaller(x, bound))
            bound = tuple(min(a, b) for a, b in zip(bound, x))
            if bound not in memo:
                best(bound)
        return PmiSequence(nodes=tuple(reversed(nodes)), coords=tuple(reversed(coords)))

    @staticmethod
    def _greedy(candidates: list[Candidate], m: int) -> PmiSequence:
        if not candidates:
            return PmiSequence()
        values = np.array([x for x, _ in candidates], dtype=np.float64).reshape(-1, m)
        alive = np.ones(len(candidates), dtype=bool)
        nodes: list[int] = []
        coords: list[int] = []
        while alive.any():
            rows = values[alive]
            mins = rows.min(axis=0)
            unique = np.isfinite(mins) & ((rows == mins).sum(axis=0) == 1)
            if not unique.any():
                # Nadie es mínimo estricto: se descarta el mayor lexicográfico.
                alive[np.flatnonzero(alive)[-1]] = False
                continue
            hits = alive & (values[:, unique] == mins[unique]).any(axis=1)
            idx = int(np.flatnonzero(hits)[0])
            coord = int(np.flatnonzero(unique & (values[idx] == mins))[0])
            nodes.append(candidates[idx][1])
            coords.append(coord)
            alive[idx] = False
        return PmiSequence(nodes=tuple(nodes), coords=tuple(coords))

    def longest_pmi(self, g: Graph, lc: LeaderConfig) -> DeltaBound:
        """δ(G, V_ℓ) con un testigo determinista."""
        dl = self.dl_vectors(g, lc)
        candidates = self._candidates(dl)
        exact = len(dl) <= self.exact_limit
        if exact:
            witness = self._exact(candidates, lc.size)
        else:
            witness = self._greedy(candidates, lc.size)
        return DeltaBound(delta=len(witness), witness=witness, exact=exact)

    def delta_leq_gamma_check(self, g: Graph, lc: LeaderConfig) -> tuple[int, int, bool]:
        """(δ, γ, δ ≤ γ) en el régimen exacto."""
        n_followers = g.n - lc.size
        if n_followers > self.exact_limit:
            raise InexactPmiError(
                f"N_f={n_followers} supera exact_limit={self.exact_limit}"
            )
        delta = self.longest_pmi(g, lc).delta
        gamma = ControllabilityAnalyzer.controllability_rank(g, lc).gamma
        return delta, gamma, delta <= gamma
