"""Configuración centralizada de la aplicación."""
from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuración de la aplicación (variables CGCL_* o archivo .env)."""

    model_config = SettingsConfigDict(
        env_prefix="CGCL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Datos y salidas
    data_dir: Path = Path("data")
    output_dir: Path = Path("output")
    dataset: str = "MUTAG"
    seed: int = 42

    # Ejecución
    log_level: str = "INFO"
    n_jobs: int = 1
    pmi_exact_limit: int = 64

    # Embedding CTRL
    leader_sizes: str = "1,2,3"
    samples_per_size: int = 5
    leader_strategy: str = "seeded-random"
    n_lap_eigs: int = 8

    # Aumentación
    aug_kind: str = "substitute"
    k: int | None = None
    aug_k_max: int = 3
    aug_leader_size: int = 2

    # Preentrenamiento contrastivo
    tau: float = 0.5
    batch: int = 32
    epochs: int = 20
    lr: float = 0.01
    momentum: float = 0.9
    hidden_dim: int = 128
    proj_dim: int = 64
    resample_augmentations: bool = True

    # Evaluación
    folds: int = 10
    label_rate: float = 0.10
    reps: int = 5
    reg: float = 10.0
    classifier: str = "svm"


@lru_cache
def get_settings() -> Settings:
    """Obtiene instancia única de configuración."""
    return Settings()
