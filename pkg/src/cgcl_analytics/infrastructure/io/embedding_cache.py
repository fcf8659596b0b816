"""
Cache binario versionado de matrices de embeddings.

Layout little-endian::

    b"CTRLEMB\\0"            magic, 8 bytes
    uint32 version           = 1
    uint64 rows, uint64 cols
    uint32 len + bytes       huella de configuración (UTF-8)
    cols × (uint32 len + bytes)   nombres de features (UTF-8)
    rows·cols × float64      valores, row-major
"""
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import polars as pl

from cgcl_analytics.application.ports.embedding_store import EmbeddingStore
from cgcl_analytics.domain.exceptions import (
    CacheFormatError,
    ShapeMismatchError,
    VersionMismatchError,
)
from cgcl_analytics.domain.value_objects.embedding import EmbeddingMatrix
from cgcl_analytics.infrastructure.config.logging import logger

MAGIC = b"CTRLEMB\0"
VERSION = 1


@dataclass(frozen=True, eq=False)
class CachedMatrix:
    values: np.ndarray
    schema: tuple[str, ...]
    fingerprint: str


def _pack_str(text: str) -> bytes:
    raw = text.encode("utf-8")
    return struct.pack("<I", len(raw)) + raw


class _Reader:
    """Cursor sobre los bytes del archivo; cualquier lectura corta es truncamiento."""

    def __init__(self, data: bytes, path: Path):
        self.data = data
        self.path = path
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise CacheFormatError(f"{self.path.name}: archivo truncado en el byte {self.pos}")
        chunk = self.data[self.pos : self.pos + n]
        self.pos += n
        return chunk

    def unpack(self, fmt: str) -> tuple:
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def string(self) -> str:
        (length,) = self.unpack("<I")
        return self.take(length).decode("utf-8")


def save_matrix(
    path: Path | str, values: np.ndarray, schema: tuple[str, ...], fingerprint: str
) -> Path:
    """Escribe la matriz con su esquema y huella."""
    path = Path(path)
    values = np.asarray(values, dtype=np.float64)
    if not schema:
        raise CacheFormatError("El esquema de features está vacío")
    if values.ndim != 2 or values.shape[1] != len(schema):
        raise ShapeMismatchError(
            f"Matriz {values.shape} incompatible con {len(schema)} nombres de features"
        )

    header = MAGIC + struct.pack("<IQQ", VERSION, values.shape[0], values.shape[1])
    header += _pack_str(fingerprint)
    header += b"".join(_pack_str(name) for name in schema)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(header + np.ascontiguousarray(values, dtype="<f8").tobytes())
    return path


def load_matrix(path: Path | str) -> CachedMatrix:
    """
    Lee una matriz guardada con ``save_matrix``.

    Raises:
        VersionMismatchError: magic o versión desconocidos
        CacheFormatError: archivo truncado, con bytes sobrantes o esquema vacío
    """
    path = Path(path)
    if not path.exists():
        raise CacheFormatError(f"No existe el cache {path}")
    reader = _Reader(path.read_bytes(), path)

    magic = reader.take(len(MAGIC))
    if magic != MAGIC:
        raise VersionMismatchError(f"{path.name}: magic desconocido {magic!r}")
    (version,) = reader.unpack("<I")
    if version != VERSION:
        raise VersionMismatchError(f"{path.name}: versión {version}, se esperaba {VERSION}")

    rows, cols = reader.unpack("<QQ")
    if cols == 0:
        raise CacheFormatError(f"{path.name}: esquema vacío")
    fingerprint = reader.string()
    schema = tuple(reader.string() for _ in range(cols))
    body = reader.take(rows * cols * 8)
    if reader.pos != len(reader.data):
        raise CacheFormatError(f"{path.name}: {len(reader.data) - reader.pos} bytes sobrantes")

    values = np.frombuffer(body, dtype="<f8").astype(np.float64).reshape(rows, cols)
    return CachedMatrix(values=values, schema=schema, fingerprint=fingerprint)


class EmbeddingCache(EmbeddingStore):
    """Cache de embeddings CTRL en un directorio de salida."""

    def __init__(self, out_dir: Path | str):
        self.out_dir = Path(out_dir)
        self.values_path = self.out_dir / "embeddings.bin"
        self.stats_path = self.out_dir / "embedding_stats.bin"
        self.csv_path = self.out_dir / "embeddings.csv"

    def save(self, matrix: EmbeddingMatrix, fingerprint: str) -> Path:
        """Guarda valores, estadísticos (media, std) y un espejo CSV."""
        save_matrix(self.values_path, matrix.values, matrix.schema, fingerprint)
        stats = np.vstack([matrix.mean, matrix.std])
        save_matrix(self.stats_path, stats, matrix.schema, fingerprint)
        pl.DataFrame(matrix.values, schema=list(matrix.schema), orient="row").write_csv(
            self.csv_path
        )
        logger.info(
            f"Embeddings guardados en {self.values_path} "
            f"({matrix.values.shape[0]}×{matrix.values.shape[1]})"
        )
        return self.values_path

    def load(self) -> tuple[EmbeddingMatrix, str]:
        cached = load_matrix(self.values_path)
        stats = load_matrix(self.stats_path)
        if stats.schema != cached.schema or stats.values.shape[0] != 2:
            raise CacheFormatError("Estadísticos de estandarización inconsistentes con la matriz")
        matrix = EmbeddingMatrix(
            values=cached.values,
            schema=cached.schema,
            mean=stats.values[0].copy(),
            std=stats.values[1].copy(),
        )
        return matrix, cached.fingerprint

    def exists(self) -> bool:
        return self.values_path.exists() and self.stats_path.exists()
