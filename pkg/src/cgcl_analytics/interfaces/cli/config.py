"""Construcción de RunConfig: defaults < entorno/.env < archivo --config < flags."""
from pathlib import Path

from dotenv import dotenv_values
from pydantic import ValidationError

from cgcl_analytics.application.schemas import (
    AugmentationSchedule,
    EvalProtocol,
    RunConfig,
    TrainConfig,
)
from cgcl_analytics.domain.exceptions import ConfigurationError
from cgcl_analytics.infrastructure.config.settings import Settings

# Claves planas aceptadas en archivo y flags (nombre de flag con "-" → "_")
CONFIG_KEYS = (
    "dataset", "data_dir", "out", "seed", "n_jobs", "log_level", "pmi_exact_limit",
    "leader_sizes", "samples_per_size", "leader_strategy", "n_lap_eigs",
    "aug_kind", "k", "aug_k_max", "aug_leader_size", "resample_augmentations",
    "tau", "batch", "epochs", "lr", "momentum", "hidden_dim", "proj_dim", "init",
    "folds", "label_rate", "reps", "reg", "classifier",
)


def settings_values(settings: Settings) -> dict:
    values = settings.model_dump()
    values["out"] = str(values.pop("output_dir"))
    values["data_dir"] = str(values["data_dir"])
    values["init"] = "uniform"
    return {key: values[key] for key in CONFIG_KEYS if key in values}


def read_config_file(path: Path | str) -> dict:
    """Archivo clave=valor; las claves pueden escribirse como los flags."""
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"No existe el archivo de configuración {path}")
    values = {}
    for raw_key, value in dotenv_values(path).items():
        key = raw_key.strip().lstrip("-").replace("-", "_").lower()
        if key not in CONFIG_KEYS:
            raise ConfigurationError(f"Clave desconocida en {path.name}: {raw_key}")
        values[key] = value
    return values


def _parse_sizes(value: object) -> tuple[int, ...]:
    if isinstance(value, (list, tuple)):
        return tuple(int(v) for v in value)
    try:
        return tuple(int(part) for part in str(value).split(",") if part.strip())
    except ValueError as e:
        raise ConfigurationError(f"leader_sizes inválido: {value!r}") from e


def _optional_int(value: object) -> int | None:
    if value is None or str(value).strip().lower() in ("", "none", "null"):
        return None
    return int(value)


def merge_values(*layers: dict) -> dict:
    """Combina capas; un None no pisa el valor de una capa anterior."""
    merged: dict = {}
    for layer in layers:
        merged.update({k: v for k, v in layer.items() if v is not None})
    return merged


def build_run_config(values: dict) -> RunConfig:
    """
    RunConfig validado a partir de claves planas.

    Raises:
        ConfigurationError: valores inválidos
    """
    try:
        config = RunConfig(
            dataset=values["dataset"],
            data_dir=str(values["data_dir"]),
            out=str(values["out"]),
            seed=values["seed"],
            leader_sizes=_parse_sizes(values["leader_sizes"]),
            samples_per_size=values["samples_per_size"],
            leader_strategy=values["leader_strategy"],
            n_lap_eigs=values["n_lap_eigs"],
            pmi_exact_limit=values["pmi_exact_limit"],
            augmentation=AugmentationSchedule(
                kind=values["aug_kind"],
                k=_optional_int(values.get("k")),
                k_max=values["aug_k_max"],
                leader_size=values["aug_leader_size"],
                resample=values["resample_augmentations"],
            ),
            train=TrainConfig(
                tau=values["tau"],
                batch=values["batch"],
                epochs=values["epochs"],
                lr=values["lr"],
                momentum=values["momentum"],
                hidden_dim=values["hidden_dim"],
                proj_dim=values["proj_dim"],
                init=values.get("init", "uniform"),
            ),
            eval=EvalProtocol(
                folds=values["folds"],
                label_rate=values["label_rate"],
                repetitions=values["reps"],
                reg=values["reg"],
                classifier=values["classifier"],
            ),
        )
    except (ValidationError, ValueError) as e:
        if isinstance(e, ConfigurationError):
            raise
        raise ConfigurationError(str(e).replace("\n", " ")) from e
    return config.with_derived_seeds()
