"""Schemas Pydantic de configuración de corridas."""
import hashlib
import json
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cgcl_analytics.application.seeds import derive_seed
from cgcl_analytics.domain.value_objects.augmentation import AugmentationKind, AugmentationSpec
from cgcl_analytics.domain.value_objects.leader_policy import LeaderPolicy, LeaderStrategy

_KINDS = (AugmentationKind.DELETE, AugmentationKind.ADD, AugmentationKind.SUBSTITUTE)


class AugmentationSchedule(BaseModel):
    """Cómo se generan las vistas aumentadas en cada época."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["delete", "add", "substitute", "mixed"] = Field(
        "substitute", description="Tipo fijo de aumentación o 'mixed' (sorteo por grafo)"
    )
    k: int | None = Field(None, ge=1, description="Aristas perturbadas; None = sorteo en 1..k_max")
    k_max: int = Field(3, ge=1, description="Máximo de aristas perturbadas por vista")
    leader_size: int = Field(2, ge=1, description="Líderes usados para el backbone")
    resample: bool = Field(True, description="Regenerar vistas en cada época")

    def spec_for(self, seed: int, epoch: int, graph_index: int) -> AugmentationSpec:
        """AugmentationSpec reproducible para (época, grafo)."""
        rng = np.random.default_rng(derive_seed(seed, "augment", epoch, graph_index))
        k = self.k if self.k is not None else int(rng.integers(1, self.k_max + 1))
        if self.kind == "mixed":
            kind = _KINDS[int(rng.integers(0, len(_KINDS)))]
        else:
            kind = AugmentationKind(self.kind)
        spec_seed = derive_seed(seed, "augment", epoch, graph_index, "spec")
        return AugmentationSpec(kind=kind, k=k, seed=spec_seed)


class TrainConfig(BaseModel):
    """Hiperparámetros del preentrenamiento contrastivo."""

    model_config = ConfigDict(frozen=True)

    tau: float = Field(0.5, gt=0, description="Temperatura de NT-Xent")
    batch: int = Field(32, ge=2, description="Tamaño de batch M")
    epochs: int = Field(20, ge=0)
    lr: float = Field(0.01, ge=0)
    momentum: float = Field(0.9, ge=0, lt=1, description="0 = descenso de gradiente simple")
    hidden_dim: int = Field(128, ge=1)
    proj_dim: int = Field(64, ge=1)
    init: Literal["uniform", "identity"] = "uniform"
    seed: int = 0


class EvalProtocol(BaseModel):
    """Protocolo de evaluación lineal."""

    model_config = ConfigDict(frozen=True)

    folds: int = Field(10, ge=2)
    label_rate: float = Field(0.10, gt=0, le=1)
    repetitions: int = Field(5, ge=1)
    reg: float = Field(10.0, gt=0, description="Fuerza del clasificador (C = reg / n_train)")
    classifier: Literal["svm", "logistic"] = "svm"
    seed: int = 0


class RunConfig(BaseModel):
    """Configuración completa de una corrida; su huella se estampa en cada artefacto."""

    model_config = ConfigDict(frozen=True)

    dataset: str = "MUTAG"
    data_dir: str = "data"
    out: str = "output"
    seed: int = 42
    leader_sizes: tuple[int, ...] = (1, 2, 3)
    samples_per_size: int = Field(5, ge=1)
    leader_strategy: LeaderStrategy = LeaderStrategy.SEEDED_RANDOM
    n_lap_eigs: int = Field(8, ge=0)
    pmi_exact_limit: int = Field(64, ge=0)
    augmentation: AugmentationSchedule = AugmentationSchedule()
    train: TrainConfig = TrainConfig()
    eval: EvalProtocol = EvalProtocol()

    @model_validator(mode="after")
    def _check_sizes(self) -> "RunConfig":
        if not self.leader_sizes or any(s < 1 for s in self.leader_sizes):
            raise ValueError(f"leader_sizes inválido: {self.leader_sizes}")
        if len(set(self.leader_sizes)) != len(self.leader_sizes):
            raise ValueError(f"leader_sizes repetidos: {self.leader_sizes}")
        return self

    def leader_policy(self) -> LeaderPolicy:
        return LeaderPolicy(
            sizes=self.leader_sizes,
            samples_per_size=self.samples_per_size,
            seed=derive_seed(self.seed, "leaders"),
            strategy=self.leader_strategy,
        )

    def augmentation_policy(self) -> LeaderPolicy:
        """Una configuración de líderes por grafo para el backbone de aumentación."""
        return LeaderPolicy(
            sizes=(self.augmentation.leader_size,),
            samples_per_size=1,
            seed=derive_seed(self.seed, "leaders", "augment"),
            strategy=self.leader_strategy,
        )

    def fingerprint(self) -> str:
        """16 hex de SHA-256 sobre el JSON canónico (sin rutas)."""
        payload = self.model_dump(mode="json", exclude={"data_dir", "out"})
        canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]

    def with_derived_seeds(self) -> "RunConfig":
        """Copia con las semillas de entrenamiento y evaluación derivadas de ``seed``."""
        return self.model_copy(
            update={
                "train": self.train.model_copy(update={"seed": derive_seed(self.seed, "train")}),
                # scikit-learn acepta random_state < 2**32
                "eval": self.eval.model_copy(
                    update={"seed": derive_seed(self.seed, "eval") % (1 << 31)}
                ),
            }
        )
