"""Servicio de dominio para métricas de controlabilidad leader-follower."""
import numpy as np
from scipy import linalg

from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig
from cgcl_analytics.domain.exceptions import StabilityError, UnreachableStateError
from cgcl_analytics.domain.services.graph_core import partition_laplacian
from cgcl_analytics.domain.value_objects.gramian_report import ControllabilityRank, GramianReport


class ControllabilityAnalyzer:
    """
    Gramiano de horizonte infinito y rango de la matriz de controlabilidad.

    La dinámica de seguidores es ẋ = -A x - B u. Con A definida positiva
    (toda componente conexa tiene un líder) el Gramiano W resuelve
    A·W + W·Aᵀ = B·Bᵀ.
    """

    RANK_RTOL = 1e-10
    STABILITY_RTOL = 1e-10
    REACH_TOL = 1e-8

    @staticmethod
    def solve_lyapunov(A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """
        Resuelve A·W + W·Aᵀ = B·Bᵀ para A simétrica definida positiva.

        Args:
            A: Bloque de seguidores (N_f × N_f), simétrico
            B: Bloque seguidor-líder (N_f × N_ℓ)

        Returns:
            W simétrica (N_f × N_f)

        Raises:
            StabilityError: si λ_min(A) no es positivo
        """
        n_f = A.shape[0]
        if n_f == 0:
            return np.zeros((0, 0))

        eigvals, Q = np.linalg.eigh(A)
        scale = max(1.0, float(np.abs(eigvals).max()))
        if eigvals[0] <= ControllabilityAnalyzer.STABILITY_RTOL * scale:
            raise StabilityError(
                f"λ_min(A) = {eigvals[0]:.3e}: hay seguidores sin camino a ningún líder"
            )

        M = Q.T @ (B @ B.T) @ Q
        W_tilde = M / (eigvals[:, None] + eigvals[None, :])
        W = Q @ W_tilde @ Q.T
        return (W + W.T) / 2

    @staticmethod
    def _report_from_gramian(W: np.ndarray) -> GramianReport:
        n_f = W.shape[0]
        if n_f == 0:
            return GramianReport(
                W=W,
                eigenvalues=np.zeros(0),
                rank=0,
                trace=0.0,
                min_nonzero_eig=0.0,
                ld=0.0,
                avg_energy=0.0,
                threshold=0.0,
            )

        eigenvalues = np.linalg.eigvalsh(W)[::-1].copy()
        mu_1 = float(eigenvalues[0])
        threshold = n_f * mu_1 * ControllabilityAnalyzer.RANK_RTOL if mu_1 > 0 else 0.0
        kept = eigenvalues[eigenvalues > threshold] if mu_1 > 0 else np.zeros(0)

        return GramianReport(
            W=W,
            eigenvalues=eigenvalues,
            rank=int(kept.size),
            trace=float(np.trace(W)),
            min_nonzero_eig=float(kept.min()) if kept.size else 0.0,
            ld=float(np.sum(np.log(kept))) if kept.size else 0.0,
            avg_energy=float(np.sum(1.0 / kept)) if kept.size else 0.0,
            threshold=threshold,
        )

    @staticmethod
    def gramian_report(g: Graph, lc: LeaderConfig) -> GramianReport:
        """Gramiano de (g, lc) con rango, traza, autovalor mínimo no nulo y log-det."""
        part = partition_laplacian(g, lc)
        W = ControllabilityAnalyzer.solve_lyapunov(part.A, part.B)
        return ControllabilityAnalyzer._report_from_gramian(W)

    @staticmethod
    def controllability_matrix(g: Graph, lc: LeaderConfig) -> np.ndarray:
        """[-B | (-A)(-B) | ... | (-A)^{N_f-1}(-B)] sin ortogonalizar."""
        part = partition_laplacian(g, lc)
        n_f = part.n_followers
        if n_f == 0:
            return np.zeros((0, len(lc.leaders)))
        block = -part.B
        blocks = [block]
        for _ in range(n_f - 1):
            block = -part.A @ block
            blocks.append(block)
        return np.hstack(blocks)

    @staticmethod
    def controllability_rank(g: Graph, lc: LeaderConfig) -> ControllabilityRank:
        """
        Dimensión γ del subespacio controlable.

        Se acumula una base ortonormal del espacio de Krylov bloque a bloque;
        cada bloque nuevo se ortogonaliza (dos pasadas) contra la base y su
        rango residual se mide con QR con pivoteo de columnas.
        """
        part = partition_laplacian(g, lc)
        n_f = part.n_followers
        if n_f == 0:
            return ControllabilityRank(gamma=0, n_followers=0)

        m = part.B.shape[1]
        basis = np.zeros((n_f, 0))
        block = -part.B
        while basis.shape[1] < n_f:
            col_norm = float(np.linalg.norm(block, axis=0).max()) if block.size else 0.0
            if col_norm == 0.0:
                break
            residual = block.copy()
            for _ in range(2):
                residual -= basis @ (basis.T @ residual)

            Q, R, _ = linalg.qr(residual, mode="economic", pivoting=True)
            tol = max(n_f, n_f * m) * col_norm * ControllabilityAnalyzer.RANK_RTOL
            diag = np.abs(np.diag(R))
            new_rank = int(np.sum(diag > tol))
            if new_rank == 0:
                break
            q_new = Q[:, :new_rank]
            basis = np.hstack([basis, q_new])
            block = -part.A @ q_new

        return ControllabilityRank(gamma=min(basis.shape[1], n_f), n_followers=n_f)

    @staticmethod
    def min_control_energy(g: Graph, lc: LeaderConfig, x_target: np.ndarray) -> float:
        """
        Energía mínima xᵀ W⁺ x para llevar el estado de 0 a ``x_target``.

        Raises:
            UnreachableStateError: si x_target no está en el subespacio controlable
        """
        report = ControllabilityAnalyzer.gramian_report(g, lc)
        x = np.asarray(x_target, dtype=np.float64).ravel()
        if x.shape[0] != report.n_followers:
            raise UnreachableStateError(
                f"x_target tiene dimensión {x.shape[0]}, se esperaba N_f={report.n_followers}"
            )
        if not np.any(x):
            return 0.0

        eigvals, V = np.linalg.eigh(report.W)
        keep = eigvals > report.threshold if report.rank else np.zeros_like(eigvals, bool)
        V_k, mu_k = V[:, keep], eigvals[keep]
        coeffs = V_k.T @ x
        residual = float(np.linalg.norm(x - V_k @ coeffs))
        tol = ControllabilityAnalyzer.REACH_TOL * max(1.0, float(np.linalg.norm(x)))
        if residual > tol:
            raise UnreachableStateError(
                f"Estado fuera del subespacio controlable (residuo {residual:.3e})"
            )
        return float(np.sum(coeffs**2 / mu_k))

