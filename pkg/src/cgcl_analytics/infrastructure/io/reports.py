"""Salidas CSV y tablas legibles con polars."""
from collections.abc import Iterable, Sequence
from dataclasses import asdict
from pathlib import Path

import polars as pl

from cgcl_analytics.domain.value_objects.augmentation import AugmentationAudit
from cgcl_analytics.infrastructure.ml.evaluation import EvalReport

SUMMARY_COLUMNS = ["dataset", "method", "mean", "std", "fingerprint"]


def _write(df: pl.DataFrame, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.write_csv(path)
    return path


def format_table(df: pl.DataFrame) -> str:
    """Tabla de texto sin forma ni tipos, para stdout."""
    with pl.Config(
        tbl_hide_dataframe_shape=True,
        tbl_hide_column_data_types=True,
        tbl_rows=-1,
        tbl_cols=-1,
        float_precision=4,
    ):
        return str(df)


def ingest_stats_frame(stats: dict, fingerprint: str) -> pl.DataFrame:
    return pl.DataFrame([{**stats, "fingerprint": fingerprint}])


def write_ingest_stats(path: Path | str, stats: dict, fingerprint: str) -> Path:
    return _write(ingest_stats_frame(stats, fingerprint), path)


def write_loss_history(path: Path | str, history: Sequence[float], fingerprint: str) -> Path:
    df = pl.DataFrame(
        {
            "epoch": list(range(1, len(history) + 1)),
            "mean_loss": [float(x) for x in history],
            "fingerprint": [fingerprint] * len(history),
        },
        schema={"epoch": pl.Int64, "mean_loss": pl.Float64, "fingerprint": pl.Utf8},
    )
    return _write(df, path)


def summary_frame(reports: Iterable[EvalReport]) -> pl.DataFrame:
    rows = [r.summary() for r in reports]
    return pl.DataFrame(rows).select(SUMMARY_COLUMNS)


def write_eval_results(out_dir: Path | str, reports: Sequence[EvalReport]) -> tuple[Path, Path]:
    """results.csv con cada fold y summary.csv con media y desviación."""
    out = Path(out_dir)
    results = pl.DataFrame([row for r in reports for row in r.rows()])
    return (
        _write(results, out / "results.csv"),
        _write(summary_frame(reports), out / "summary.csv"),
    )


def write_ablation(path: Path | str, reports: Sequence[EvalReport]) -> Path:
    return _write(summary_frame(reports), path)


def ablation_table(reports: Sequence[EvalReport]) -> str:
    """Tabla con accuracy en porcentaje: 'media ± std' por método."""
    df = summary_frame(reports).with_columns(
        pl.format(
            "{} ± {}",
            (pl.col("mean") * 100).round(2),
            (pl.col("std") * 100).round(2),
        ).alias("accuracy (%)")
    )
    return format_table(df.select("dataset", "method", "accuracy (%)"))


def write_audit(
    path: Path | str, audits: Sequence[AugmentationAudit], fingerprint: str
) -> Path:
    rows = [
        {"graph": index, **asdict(audit), "ok": audit.ok, "fingerprint": fingerprint}
        for index, audit in enumerate(audits)
    ]
    columns = [
        "graph", "kind", "edges_before", "edges_after", "removed", "added",
        "delta_before", "delta_after", "exact", "distances_preserved", "edge_contract", "ok",
        "fingerprint",
    ]
    return _write(pl.DataFrame(rows).select(columns), path)
