"""Punto de entrada de la CLI ``cgcl``."""
import argparse
import sys
from collections.abc import Sequence
from typing import NoReturn
from pathlib import Path

from cgcl_analytics.application.schemas import RunConfig
from cgcl_analytics.application.use_cases import (
    AumentarDataset,
    CalcularEmbeddings,
    EvaluarRepresentaciones,
    GenerarReporteAblacion,
    IngerirDataset,
    PreentrenarEncoder,
)
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.exceptions import AuditFailedError, CacheFormatError, CgclError
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.infrastructure.config.logging import logger, setup_logging
from cgcl_analytics.infrastructure.config.settings import get_settings
from cgcl_analytics.infrastructure.io.embedding_cache import EmbeddingCache
from cgcl_analytics.infrastructure.io.encoder_storage import EncoderStorage
from cgcl_analytics.infrastructure.io.reports import (
    format_table,
    ingest_stats_frame,
    summary_frame,
    write_ingest_stats,
)
from cgcl_analytics.infrastructure.io.tudataset import TUDatasetRepository
from cgcl_analytics.infrastructure.parallel import joblib_mapper
from cgcl_analytics.interfaces.cli.config import (
    build_run_config,
    merge_values,
    read_config_file,
    settings_values,
)

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_AUDIT_FAILED = 3

ENCODER_NAMES = {"cgcl": "encoder", "random-cgcl": "encoder_random"}
METHOD_LABELS = {"baseline": "Baseline", "cgcl": "CGCL", "random-cgcl": "Random-CGCL"}


class CgclArgumentParser(argparse.ArgumentParser):
    """Parser cuyos errores de uso salen en una sola línea ``error code=usage``."""

    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_USAGE, _error_line("usage", f"{self.prog}: {message}") + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = CgclArgumentParser(add_help=False)
    common.add_argument("--config", help="Archivo clave=valor con la configuración")
    common.add_argument("--dataset", help="Nombre del dataset TUDataset (p. ej. MUTAG)")
    common.add_argument("--data-dir", help="Directorio con los archivos TUDataset")
    common.add_argument("--out", help="Directorio de salida")
    common.add_argument("--seed", type=int, help="Semilla global")
    common.add_argument("--n-jobs", type=int, help="Workers de joblib")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING o ERROR")
    common.add_argument("--leader-sizes", help="Tamaños de líderes separados por coma")
    common.add_argument("--samples-per-size", type=int)
    common.add_argument("--leader-strategy", choices=["seeded-random", "degree-ranked"])
    common.add_argument("--n-lap-eigs", type=int)
    common.add_argument("--pmi-exact-limit", type=int)
    common.add_argument(
        "--aug-kind", "--kind", dest="aug_kind",
        choices=["delete", "add", "substitute", "mixed"],
    )
    common.add_argument("--k", type=int, help="Aristas perturbadas (fijo)")
    common.add_argument("--aug-k-max", type=int)
    common.add_argument("--aug-leader-size", type=int)
    common.add_argument("--tau", type=float)
    common.add_argument("--batch", type=int)
    common.add_argument("--epochs", type=int)
    common.add_argument("--lr", type=float)
    common.add_argument("--momentum", type=float)
    common.add_argument("--hidden-dim", type=int)
    common.add_argument("--proj-dim", type=int)
    common.add_argument("--init", choices=["uniform", "identity"])
    common.add_argument("--folds", type=int)
    common.add_argument("--label-rate", type=float)
    common.add_argument("--reps", type=int)
    common.add_argument("--reg", type=float)
    common.add_argument("--classifier", choices=["svm", "logistic"])

    parser = CgclArgumentParser(
        prog="cgcl",
        description="Embeddings de controlabilidad, aumentaciones y aprendizaje contrastivo",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("ingest", parents=[common], help="Parsea y resume un dataset")
    commands.add_parser("embed", parents=[common], help="Calcula y guarda la matriz CTRL")
    commands.add_parser("augment", parents=[common], help="Dataset aumentado + auditoría de δ")
    commands.add_parser("pretrain", parents=[common], help="Preentrena el encoder CGCL")
    evaluate = commands.add_parser("evaluate", parents=[common], help="Evaluación lineal")
    evaluate.add_argument(
        "--method", choices=list(METHOD_LABELS), default="baseline",
        help="Representación a evaluar",
    )
    commands.add_parser("report", parents=[common], help="Tabla Baseline / Random-CGCL / CGCL")
    return parser


def resolve_config(args: argparse.Namespace) -> tuple[RunConfig, dict]:
    settings = get_settings()
    file_values = read_config_file(args.config) if args.config else {}
    flag_values = {k: v for k, v in vars(args).items() if k not in ("command", "config", "method")}
    values = merge_values(settings_values(settings), file_values, flag_values)
    return build_run_config(values), values


def _load_dataset(config: RunConfig) -> Dataset:
    return IngerirDataset(TUDatasetRepository(config.data_dir)).execute(config.dataset)["dataset"]


def _embeddings(dataset: Dataset, config: RunConfig, mapper) -> EmbeddingMatrix:
    store = EmbeddingCache(config.out)
    return CalcularEmbeddings(store, mapper).execute(dataset, config, reuse_cache=True)


def _encoder_params(dataset, matrix, config, method, mapper):
    storage = EncoderStorage(config.out)
    name = ENCODER_NAMES[method]
    try:
        params, fingerprint = storage.load_encoder(name)
        if fingerprint == config.fingerprint() and params.dims[0] == matrix.values.shape[1]:
            return params
        logger.info(f"Encoder '{name}' con otra huella: se vuelve a preentrenar")
    except CacheFormatError:
        logger.info(f"No hay encoder '{name}' en {config.out}: se preentrena")
    result = PreentrenarEncoder(storage, mapper).execute(
        dataset, matrix, config, controlled=method == "cgcl", model_name=name
    )
    return result.params


def run(command: str, args: argparse.Namespace, config: RunConfig, n_jobs: int) -> int:
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    fingerprint = config.fingerprint()
    mapper = joblib_mapper(n_jobs)

    if command == "ingest":
        result = IngerirDataset(TUDatasetRepository(config.data_dir)).execute(config.dataset)
        write_ingest_stats(out / "ingest_stats.csv", result["stats"], fingerprint)
        print(format_table(ingest_stats_frame(result["stats"], fingerprint)))
        return 0

    dataset = _load_dataset(config)

    if command == "embed":
        matrix = CalcularEmbeddings(EmbeddingCache(out), mapper).execute(dataset, config)
        rows, cols = matrix.values.shape
        print(f"embeddings {rows}x{cols} fingerprint={fingerprint}")
        return 0

    if command == "augment":
        result = AumentarDataset(TUDatasetRepository(config.data_dir), mapper).execute(
            dataset, config, out
        )
        audits = result["audits"]
        print(
            f"augment graphs={len(audits)} removed={sum(a.removed for a in audits)} "
            f"added={sum(a.added for a in audits)} fingerprint={fingerprint}"
        )
        return 0

    matrix = _embeddings(dataset, config, mapper)

    if command == "pretrain":
        result = PreentrenarEncoder(EncoderStorage(out), mapper).execute(
            dataset, matrix, config, controlled=True, out_dir=out
        )
        print(f"pretrain epochs={len(result.loss_history)} final_loss={result.final_loss:.6f}")
        return 0

    if command == "evaluate":
        params = None
        if args.method != "baseline":
            params = _encoder_params(dataset, matrix, config, args.method, mapper)
        report = EvaluarRepresentaciones().execute(
            matrix,
            dataset.labels,
            config.eval,
            dataset.name,
            METHOD_LABELS[args.method],
            fingerprint,
            params=params,
            out_dir=out,
        )
        print(format_table(summary_frame([report])))
        return 0

    if command == "report":
        result = GenerarReporteAblacion(mapper).execute(dataset, matrix, config, out_dir=out)
        print(result["table"])
        return 0

    raise CgclError(f"Comando desconocido: {command}")


def _error_line(code: str, message: str) -> str:
    clean = " ".join(str(message).split()).replace('"', "'")
    return f'error code={code} message="{clean}"'


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, values = resolve_config(args)
        setup_logging(str(values.get("log_level", "INFO")))
        logger.info(f"cgcl {args.command} - huella {config.fingerprint()}")
        return run(args.command, args, config, int(values.get("n_jobs", 1)))
    except CgclError as e:
        print(_error_line(e.code, str(e)), file=sys.stderr)
        return EXIT_AUDIT_FAILED if isinstance(e, AuditFailedError) else EXIT_ERROR
    except OSError as e:
        print(_error_line("io_error", str(e)), file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"❌ Error inesperado: {e}", exc_info=True)
        print(_error_line("internal", str(e)), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
