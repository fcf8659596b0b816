"""Fixtures compartidas: grafos chicos con nombre, generador aleatorio y datasets en disco."""
import os
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from cgcl_analytics.domain.entities.graph import Graph
from cgcl_analytics.infrastructure.config.settings import get_settings


def path_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(n=leaves + 1, edges=frozenset((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def random_connected_graph(
    rng: np.random.Generator, n: int, extra_edge_prob: float = 0.3, label: int | None = None
) -> Graph:
    """Árbol aleatorio (cada nodo se cuelga de uno anterior) más aristas extra."""
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph(n=n, edges=frozenset(edges), graph_label=label)


def random_tree(rng: np.random.Generator, n: int, label: int | None = None) -> Graph:
    return random_connected_graph(rng, n, extra_edge_prob=0.0, label=label)


def write_tu_files(
    directory: Path,
    name: str,
    graphs: list[tuple[int, list[tuple[int, int]]]],
    labels: list[int],
    node_labels: list[int] | None = None,
) -> Path:
    """
    Escribe un dataset TUDataset a mano.

    ``graphs`` es una lista de (n_nodos, aristas locales 0-based); las
    aristas se escriben en ambos sentidos con ids globales 1-based.
    """
    directory.mkdir(parents=True, exist_ok=True)
    a_lines, indicator = [], []
    offset = 0
    for graph_id, (n, edges) in enumerate(graphs, start=1):
        indicator += [str(graph_id)] * n
        for u, v in edges:
            a_lines.append(f"{offset + u + 1}, {offset + v + 1}")
            a_lines.append(f"{offset + v + 1}, {offset + u + 1}")
        offset += n
    (directory / f"{name}_A.txt").write_text("\n".join(a_lines) + "\n")
    (directory / f"{name}_graph_indicator.txt").write_text("\n".join(indicator) + "\n")
    (directory / f"{name}_graph_labels.txt").write_text("\n".join(map(str, labels)) + "\n")
    if node_labels is not None:
        (directory / f"{name}_node_labels.txt").write_text(
            "\n".join(map(str, node_labels)) + "\n"
        )
    return directory


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def graph_factory() -> Callable[..., Graph]:
    return random_connected_graph


@pytest.fixture
def tiny_tu_dir(tmp_path: Path) -> Path:
    """TINY: K2 (clase 1) y K3 (clase -1), con etiquetas de nodo."""
    return write_tu_files(
        tmp_path / "data" / "TINY",
        "TINY",
        graphs=[(2, [(0, 1)]), (3, [(0, 1), (1, 2), (0, 2)])],
        labels=[1, -1],
        node_labels=[0, 1, 2, 2, 2],
    )


@pytest.fixture
def toy_tu_dir(tmp_path: Path) -> Path:
    """TOY: 24 grafos conexos chicos, dos clases (caminos largos vs densos)."""
    rng = np.random.default_rng(7)
    graphs, labels = [], []
    for i in range(24):
        n = int(rng.integers(5, 9))
        if i % 2 == 0:
            g = random_connected_graph(rng, n, extra_edge_prob=0.05)
        else:
            g = random_connected_graph(rng, n, extra_edge_prob=0.6)
        graphs.append((g.n, list(g.sorted_edges)))
        labels.append(i % 2)
    return write_tu_files(tmp_path / "data" / "TOY", "TOY", graphs, labels)


@pytest.fixture(autouse=True)
def clear_settings_cache(monkeypatch: pytest.MonkeyPatch):
    """Aísla cada test de variables CGCL_* del entorno y del cache de settings."""
    for key in list(os.environ):
        if key.startswith("CGCL_") and key != "CGCL_DATA_DIR":
            monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
