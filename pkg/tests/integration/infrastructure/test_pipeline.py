"""Casos de uso sobre el dataset TOY escrito en disco."""
from pathlib import Path

import numpy as np
import polars as pl
import pytest

from cgcl_analytics.application.schemas import (
    AugmentationSchedule,
    EvalProtocol,
    RunConfig,
    TrainConfig,
)
from cgcl_analytics.application.use_cases import (
    AumentarDataset,
    CalcularEmbeddings,
    EvaluarRepresentaciones,
    GenerarReporteAblacion,
    IngerirDataset,
    PreentrenarEncoder,
)
from cgcl_analytics.application.vistas_aumentadas import make_augment_fn
from cgcl_analytics.infrastructure.io.embedding_cache import EmbeddingCache
from cgcl_analytics.infrastructure.io.encoder_storage import EncoderStorage
from cgcl_analytics.infrastructure.io.tudataset import TUDatasetRepository, parse_tudataset
from cgcl_analytics.infrastructure.parallel import joblib_mapper
from tests.conftest import random_tree, write_tu_files


def _config(data_dir: Path, out: Path, **overrides) -> RunConfig:
    fields = dict(
        dataset="TOY",
        data_dir=str(data_dir),
        out=str(out),
        seed=5,
        leader_sizes=(1, 2),
        samples_per_size=2,
        n_lap_eigs=2,
        train=TrainConfig(epochs=2, batch=8, hidden_dim=8, proj_dim=4),
        eval=EvalProtocol(folds=3, repetitions=1, label_rate=0.5),
    )
    fields.update(overrides)
    return RunConfig(**fields).with_derived_seeds()


@pytest.fixture
def toy(toy_tu_dir: Path):
    return IngerirDataset(TUDatasetRepository(toy_tu_dir.parent)).execute("TOY")["dataset"]


def test_ingest_reports_statistics(toy_tu_dir: Path):
    result = IngerirDataset(TUDatasetRepository(toy_tu_dir.parent)).execute("TOY")
    assert result["stats"]["graphs"] == 24
    assert result["stats"]["classes"] == 2


def test_embeddings_reuse_matching_cache(toy, tmp_path: Path):
    config = _config(tmp_path, tmp_path / "out")
    store = EmbeddingCache(tmp_path / "out")
    first = CalcularEmbeddings(store).execute(toy, config)
    assert first.values.shape == (24, 12 * 2 + 2 + 4)
    again = CalcularEmbeddings(store).execute(toy, config, reuse_cache=True)
    np.testing.assert_array_equal(again.values, first.values)


def test_embeddings_independent_of_workers(toy, tmp_path: Path):
    config = _config(tmp_path, tmp_path / "out")
    serial = CalcularEmbeddings().execute(toy, config)
    parallel = CalcularEmbeddings(mapper=joblib_mapper(2)).execute(toy, config)
    assert serial.values.tobytes() == parallel.values.tobytes()


@pytest.mark.parametrize("kind", ["delete", "add", "substitute", "mixed"])
def test_augment_writes_dataset_and_audit(toy, tmp_path: Path, kind):
    config = _config(tmp_path, tmp_path / "out", augmentation=AugmentationSchedule(kind=kind))
    result = AumentarDataset(TUDatasetRepository(tmp_path)).execute(toy, config, tmp_path / "out")
    assert all(audit.ok for audit in result["audits"])

    reloaded = parse_tudataset(tmp_path / "out" / "augmented", "TOY")
    assert reloaded.graphs == result["augmented"].graphs
    audit = pl.read_csv(result["audit_path"])
    assert audit.height == 24
    assert audit["fingerprint"].unique().to_list() == [config.fingerprint()]


def test_augment_delete_on_trees_removes_nothing(tmp_path: Path):
    rng = np.random.default_rng(3)
    trees = [random_tree(rng, int(rng.integers(4, 10))) for _ in range(6)]
    write_tu_files(
        tmp_path / "TREES", "TREES", [(t.n, list(t.sorted_edges)) for t in trees], [0, 1] * 3
    )
    dataset = parse_tudataset(tmp_path, "TREES")
    config = _config(
        tmp_path, tmp_path / "out", dataset="TREES",
        augmentation=AugmentationSchedule(kind="delete", k=3),
    )
    augment = AumentarDataset(TUDatasetRepository(tmp_path))
    result = augment.execute(dataset, config, tmp_path / "out")
    assert [audit.removed for audit in result["audits"]] == [0] * 6


def test_augmented_views_are_standardized(toy, tmp_path: Path):
    config = _config(tmp_path, tmp_path / "out")
    matrix = CalcularEmbeddings().execute(toy, config)
    augment_fn = make_augment_fn(toy.graphs, config, matrix)
    views = augment_fn(0)
    assert views.shape == matrix.values.shape
    assert np.all(np.isfinite(views))
    np.testing.assert_array_equal(views, augment_fn(0))


def test_pretrain_saves_checkpoint_and_history(toy, tmp_path: Path):
    out = tmp_path / "out"
    config = _config(tmp_path, out)
    matrix = CalcularEmbeddings().execute(toy, config)
    result = PreentrenarEncoder(EncoderStorage(out)).execute(toy, matrix, config, out_dir=out)
    assert len(result.loss_history) == 2

    params, fingerprint = EncoderStorage(out).load_encoder("encoder")
    assert fingerprint == config.fingerprint()
    assert params.dims == (matrix.values.shape[1], 8, 4)
    history = pl.read_csv(out / "loss_history.csv")
    assert history.columns == ["epoch", "mean_loss", "fingerprint"]
    assert history["epoch"].to_list() == [1, 2]


def test_evaluate_writes_csvs(toy, tmp_path: Path):
    config = _config(tmp_path, tmp_path / "out")
    matrix = CalcularEmbeddings().execute(toy, config)
    report = EvaluarRepresentaciones().execute(
        matrix, toy.labels, config.eval, "TOY", "Baseline", config.fingerprint(),
        out_dir=tmp_path / "out",
    )
    assert report.accuracies.shape == (1, 3)
    results = pl.read_csv(tmp_path / "out" / "results.csv")
    summary = pl.read_csv(tmp_path / "out" / "summary.csv")
    assert results.columns == ["dataset", "method", "repetition", "fold", "accuracy", "fingerprint"]
    assert summary.columns == ["dataset", "method", "mean", "std", "fingerprint"]


def test_ablation_report(toy, tmp_path: Path):
    out = tmp_path / "out"
    config = _config(tmp_path, out)
    matrix = CalcularEmbeddings().execute(toy, config)
    result = GenerarReporteAblacion().execute(toy, matrix, config, out_dir=out)
    assert [r.method for r in result["reports"]] == ["Baseline", "Random-CGCL", "CGCL"]
    assert "Random-CGCL" in result["table"]
    table = pl.read_csv(out / "ablation.csv")
    assert table["method"].to_list() == ["Baseline", "Random-CGCL", "CGCL"]
    assert all(0.0 <= r.mean <= 1.0 for r in result["reports"])
