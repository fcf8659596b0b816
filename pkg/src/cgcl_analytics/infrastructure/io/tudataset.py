"""
Lectura y escritura de datasets en formato TUDataset.

Archivos: ``{name}_A.txt`` (aristas 1-based "u, v"), ``{name}_graph_indicator.txt``
(grafo de cada nodo), ``{name}_graph_labels.txt`` y, opcional,
``{name}_node_labels.txt``.
"""
from pathlib import Path

import numpy as np
import polars as pl

from cgcl_analytics.application.ports.dataset_repository import DatasetRepository
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.entities.graph import Graph
from cgcl_analytics.domain.exceptions import DatasetFormatError
from cgcl_analytics.infrastructure.config.logging import logger


def _dataset_dir(directory: Path, name: str) -> Path:
    nested = Path(directory) / name
    return nested if nested.is_dir() else Path(directory)


def _read_int_table(path: Path, n_cols: int) -> pl.DataFrame:
    """
    Lee un archivo de enteros separados por coma.

    Devuelve columnas ``lineno`` (1-based en el archivo) y ``c0..c{n-1}``.
    Las líneas vacías se ignoran.
    """
    if not path.exists():
        raise DatasetFormatError(f"Falta el archivo requerido: {path}")

    lines = path.read_text(encoding="utf-8").splitlines()
    df = (
        pl.DataFrame({"raw": lines}, schema={"raw": pl.Utf8})
        .with_row_index("lineno", offset=1)
        .filter(pl.col("raw").str.strip_chars() != "")
    )
    tokens = pl.col("raw").str.split(",")
    df = df.with_columns(
        tokens.list.len().alias("n_tokens"),
        *[
            tokens.list.get(i, null_on_oob=True)
            .str.strip_chars()
            .cast(pl.Int64, strict=False)
            .alias(f"c{i}")
            for i in range(n_cols)
        ],
    )

    bad = df.filter(
        (pl.col("n_tokens") != n_cols)
        | pl.any_horizontal([pl.col(f"c{i}").is_null() for i in range(n_cols)])
    )
    if bad.height:
        row = bad.row(0, named=True)
        raise DatasetFormatError(
            f"{path.name}:{row['lineno']}: se esperaban {n_cols} enteros, llegó '{row['raw']}'"
        )
    return df.drop("raw", "n_tokens")


def parse_tudataset(directory: Path | str, name: str) -> Dataset:
    """
    Parsea un dataset TUDataset a grafos con ids locales 0-based.

    Las aristas repetidas o recíprocas se colapsan y los self-loops se
    descartan; ambos se cuentan en ``Dataset.diagnostics``. Las etiquetas de
    grafo se remapean a 0..C-1 respetando el orden de los valores originales.

    Raises:
        DatasetFormatError: archivo faltante, token no entero o arista entre grafos
    """
    base = _dataset_dir(Path(directory), name)
    logger.info(f"Parseando TUDataset '{name}' desde {base}")

    nodes = (
        _read_int_table(base / f"{name}_graph_indicator.txt", 1)
        .rename({"c0": "graph"})
        .with_columns(pl.int_range(1, pl.len() + 1).alias("node"))
    )
    labels = _read_int_table(base / f"{name}_graph_labels.txt", 1).rename({"c0": "label"})
    edges = _read_int_table(base / f"{name}_A.txt", 2).rename({"c0": "u", "c1": "v"})

    n_graphs = labels.height
    n_nodes = nodes.height
    bad_graph = nodes.filter((pl.col("graph") < 1) | (pl.col("graph") > n_graphs))
    if bad_graph.height:
        row = bad_graph.row(0, named=True)
        raise DatasetFormatError(
            f"{name}_graph_indicator.txt:{row['lineno']}: "
            f"grafo {row['graph']} fuera de 1..{n_graphs}"
        )

    nodes = nodes.with_columns(
        pl.int_range(pl.len()).over("graph").alias("local")
    ).sort("node")
    sizes = np.bincount(nodes["graph"].to_numpy() - 1, minlength=n_graphs)
    if (sizes == 0).any():
        missing = int(np.flatnonzero(sizes == 0)[0]) + 1
        raise DatasetFormatError(f"El grafo {missing} de '{name}' no tiene nodos")

    bad_edge = edges.filter(
        (pl.col("u") < 1) | (pl.col("u") > n_nodes) | (pl.col("v") < 1) | (pl.col("v") > n_nodes)
    )
    if bad_edge.height:
        row = bad_edge.row(0, named=True)
        raise DatasetFormatError(
            f"{name}_A.txt:{row['lineno']}: nodo fuera de 1..{n_nodes} en ({row['u']}, {row['v']})"
        )

    lookup = nodes.select("node", "graph", "local")
    edges = (
        edges.join(lookup.rename({"node": "u", "graph": "gu", "local": "lu"}), on="u", how="left")
        .join(lookup.rename({"node": "v", "graph": "gv", "local": "lv"}), on="v", how="left")
        .sort("lineno")
    )
    crossing = edges.filter(pl.col("gu") != pl.col("gv"))
    if crossing.height:
        row = crossing.row(0, named=True)
        raise DatasetFormatError(
            f"{name}_A.txt:{row['lineno']}: la arista ({row['u']}, {row['v']}) une los grafos "
            f"{row['gu']} y {row['gv']}"
        )

    self_loops = edges.filter(pl.col("u") == pl.col("v")).height
    undirected = (
        edges.filter(pl.col("u") != pl.col("v"))
        .select(
            pl.col("gu").alias("graph"),
            pl.min_horizontal("lu", "lv").alias("a"),
            pl.max_horizontal("lu", "lv").alias("b"),
        )
    )
    unique_edges = undirected.unique().sort("graph", "a", "b")
    collapsed = undirected.height - unique_edges.height
    if self_loops:
        logger.warning(f"'{name}': {self_loops} self-loops descartados")
    if collapsed:
        logger.info(f"'{name}': {collapsed} aristas repetidas o recíprocas colapsadas")

    node_labels_path = base / f"{name}_node_labels.txt"
    node_labels: np.ndarray | None = None
    if node_labels_path.exists():
        node_table = _read_int_table(node_labels_path, 1)
        if node_table.height != n_nodes:
            raise DatasetFormatError(
                f"{node_labels_path.name}: {node_table.height} líneas, se esperaban {n_nodes}"
            )
        ordered = nodes.with_columns(node_table["c0"].alias("nl")).sort("graph", "local")
        node_labels = ordered["nl"].to_numpy()

    originals = labels["label"].to_list()
    label_names = tuple(sorted(set(originals)))
    remap = {original: idx for idx, original in enumerate(label_names)}

    edge_graph = unique_edges["graph"].to_numpy() - 1
    edge_a = unique_edges["a"].to_numpy()
    edge_b = unique_edges["b"].to_numpy()
    edge_splits = np.cumsum(np.bincount(edge_graph, minlength=n_graphs))[:-1]
    node_splits = np.cumsum(sizes)[:-1]
    per_graph_a = np.split(edge_a, edge_splits)
    per_graph_b = np.split(edge_b, edge_splits)
    per_graph_labels = np.split(node_labels, node_splits) if node_labels is not None else None

    graphs = tuple(
        Graph(
            n=int(sizes[i]),
            edges=frozenset(zip(per_graph_a[i].tolist(), per_graph_b[i].tolist())),
            node_labels=tuple(per_graph_labels[i].tolist()) if per_graph_labels else None,
            graph_label=remap[originals[i]],
        )
        for i in range(n_graphs)
    )

    dataset = Dataset(
        name=name,
        graphs=graphs,
        num_classes=len(label_names),
        label_names=label_names,
        diagnostics={
            "self_loops_dropped": self_loops,
            "reciprocal_collapsed": collapsed,
            "edge_lines": edges.height,
        },
    )
    logger.info(
        f"✅ '{name}': {len(dataset)} grafos, {dataset.num_classes} clases, {n_nodes} nodos"
    )
    return dataset


def write_tudataset(dataset: Dataset, directory: Path | str, name: str | None = None) -> list[Path]:
    """
    Escribe el dataset en formato TUDataset, re-ingestable por ``parse_tudataset``.

    Cada arista se escribe en ambos sentidos, como en los exports originales.
    """
    name = name or dataset.name
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)

    offsets = np.concatenate([[0], np.cumsum([g.n for g in dataset.graphs])])
    sources: list[int] = []
    targets: list[int] = []
    for offset, graph in zip(offsets.tolist(), dataset.graphs):
        for u, v in graph.sorted_edges:
            sources += [offset + u + 1, offset + v + 1]
            targets += [offset + v + 1, offset + u + 1]

    paths = {
        "A": out / f"{name}_A.txt",
        "indicator": out / f"{name}_graph_indicator.txt",
        "labels": out / f"{name}_graph_labels.txt",
    }
    pl.DataFrame({"u": sources, "v": targets}, schema={"u": pl.Int64, "v": pl.Int64}).write_csv(
        paths["A"], include_header=False, separator=","
    )
    pl.DataFrame(
        {"graph": np.repeat(np.arange(1, len(dataset) + 1), [g.n for g in dataset.graphs])}
    ).write_csv(paths["indicator"], include_header=False)
    names = dataset.label_names or tuple(range(dataset.num_classes))
    pl.DataFrame({"label": [names[g.graph_label] for g in dataset.graphs]}).write_csv(
        paths["labels"], include_header=False
    )

    if all(g.node_labels is not None for g in dataset.graphs):
        paths["node_labels"] = out / f"{name}_node_labels.txt"
        pl.DataFrame(
            {"label": [x for g in dataset.graphs for x in g.node_labels]}
        ).write_csv(paths["node_labels"], include_header=False)

    logger.info(f"Dataset '{name}' escrito en {out}")
    return list(paths.values())


def dataset_statistics(dataset: Dataset) -> dict:
    """Estadísticos por dataset: grafos, |V| y |E| promedio, rango de |V| y clases."""
    per_graph = pl.DataFrame(
        {
            "nodes": [g.n for g in dataset.graphs],
            "edges": [g.num_edges for g in dataset.graphs],
        }
    )
    summary = per_graph.select(
        pl.len().alias("graphs"),
        pl.col("nodes").mean().alias("avg_nodes"),
        pl.col("edges").mean().alias("avg_edges"),
        pl.col("nodes").min().alias("min_nodes"),
        pl.col("nodes").max().alias("max_nodes"),
    ).row(0, named=True)
    return {
        "dataset": dataset.name,
        **summary,
        "classes": dataset.num_classes,
        "self_loops_dropped": dataset.diagnostics.get("self_loops_dropped", 0),
        "reciprocal_collapsed": dataset.diagnostics.get("reciprocal_collapsed", 0),
    }


class TUDatasetRepository(DatasetRepository):
    """Repositorio de datasets TUDataset sobre un directorio local."""

    def __init__(self, data_dir: Path | str = "data"):
        self.data_dir = Path(data_dir)

    def load(self, name: str) -> Dataset:
        return parse_tudataset(self.data_dir, name)

    def save(self, dataset: Dataset, directory: Path) -> list[Path]:
        return write_tudataset(dataset, directory)
