"""
Persistencia de checkpoints del encoder con registro metadata.json.

Layout binario little-endian del checkpoint::

    b"CTRLENC\\0"           magic, 8 bytes
    uint32 version          = 1
    uint32 d, h, p
    uint32 len + bytes      huella de configuración (UTF-8)
    W1 (h×d), b1 (h), W2 (h×h), b2 (h), W3 (p×h), b3 (p)   float64 row-major
"""
import json
import struct
from datetime import datetime
from pathlib import Path

import numpy as np

from cgcl_analytics.application.ports.encoder_store import EncoderStore
from cgcl_analytics.domain.exceptions import CacheFormatError, VersionMismatchError
from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams
from cgcl_analytics.infrastructure.config.logging import logger

MAGIC = b"CTRLENC\0"
VERSION = 1


def write_checkpoint(path: Path | str, params: EncoderParams, fingerprint: str) -> Path:
    path = Path(path)
    d, h, p = params.dims
    raw_fp = fingerprint.encode("utf-8")
    header = MAGIC + struct.pack("<IIIII", VERSION, d, h, p, len(raw_fp)) + raw_fp
    body = b"".join(np.ascontiguousarray(a, dtype="<f8").tobytes() for a in params.arrays())
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(header + body)
    return path


def read_checkpoint(path: Path | str) -> tuple[EncoderParams, str]:
    """
    Lee un checkpoint escrito con ``write_checkpoint``.

    Raises:
        VersionMismatchError: magic o versión desconocidos
        CacheFormatError: archivo truncado o con bytes sobrantes
    """
    path = Path(path)
    if not path.exists():
        raise CacheFormatError(f"No existe el checkpoint {path}")
    data = path.read_bytes()
    if len(data) < len(MAGIC) + 20:
        raise CacheFormatError(f"{path.name}: cabecera truncada")
    if data[: len(MAGIC)] != MAGIC:
        raise VersionMismatchError(f"{path.name}: magic desconocido")
    version, d, h, p, fp_len = struct.unpack_from("<IIIII", data, len(MAGIC))
    if version != VERSION:
        raise VersionMismatchError(f"{path.name}: versión {version}, se esperaba {VERSION}")

    offset = len(MAGIC) + 20
    fingerprint = data[offset : offset + fp_len].decode("utf-8")
    offset += fp_len
    shapes = [(h, d), (h,), (h, h), (h,), (p, h), (p,)]
    expected = offset + 8 * sum(int(np.prod(s)) for s in shapes)
    if len(data) != expected:
        raise CacheFormatError(f"{path.name}: {len(data)} bytes, se esperaban {expected}")

    arrays = []
    for shape in shapes:
        size = int(np.prod(shape))
        arrays.append(np.frombuffer(data, dtype="<f8", count=size, offset=offset).reshape(shape))
        offset += 8 * size
    return EncoderParams(*(a.astype(np.float64) for a in arrays)), fingerprint


class EncoderStorage(EncoderStore):
    """Checkpoints del encoder en un directorio, con registro ``metadata.json``."""

    def __init__(self, models_dir: Path | str = "output"):
        self.models_dir = Path(models_dir)
        self.models_dir.mkdir(parents=True, exist_ok=True)
        self.registry_file = self.models_dir / "metadata.json"

    def save_encoder(
        self,
        params: EncoderParams,
        fingerprint: str,
        final_loss: float,
        model_name: str = "encoder",
    ) -> str:
        """
        Guarda el checkpoint y registra dimensiones, huella y pérdida final.

        Returns:
            Path del checkpoint guardado
        """
        model_path = self.models_dir / f"{model_name}.ckpt"
        logger.info(f"Guardando encoder en: {model_path}")
        write_checkpoint(model_path, params, fingerprint)

        d, h, p = params.dims
        registry = self.read_registry()
        registry[model_name] = {
            "checkpoint": model_path.name,
            "fingerprint": fingerprint,
            "embedding_dim": d,
            "dims": {"d": d, "h": h, "p": p},
            "n_params": int(sum(a.size for a in params.arrays())),
            "final_loss": final_loss,
            "saved_at": datetime.now().isoformat(),
        }
        self.registry_file.write_text(json.dumps(registry, indent=2, sort_keys=True))

        size_kb = model_path.stat().st_size / 1024
        logger.info(f"Encoder guardado exitosamente ({size_kb:.1f} KB)")
        return str(model_path)

    def load_encoder(self, model_name: str) -> tuple[EncoderParams, str]:
        """
        Carga (parámetros, huella) y la contrasta con el registro.

        Raises:
            CacheFormatError: checkpoint ausente o distinto de lo registrado
        """
        model_path = self.models_dir / f"{model_name}.ckpt"
        if not model_path.exists():
            raise CacheFormatError(f"Encoder no encontrado: {model_path}")
        logger.info(f"Cargando encoder: {model_path}")
        params, fingerprint = read_checkpoint(model_path)

        entry = self.read_registry().get(model_name)
        if entry is None:
            logger.warning(f"{model_name} no figura en {self.registry_file.name}")
        elif entry["fingerprint"] != fingerprint or entry["embedding_dim"] != params.dims[0]:
            raise CacheFormatError(
                f"{model_path.name} no coincide con el registro "
                f"(huella {fingerprint}, registrada {entry['fingerprint']})"
            )
        return params, fingerprint

    def read_registry(self) -> dict[str, dict]:
        if not self.registry_file.exists():
            return {}
        try:
            return json.loads(self.registry_file.read_text())
        except json.JSONDecodeError as e:
            raise CacheFormatError(f"{self.registry_file.name} ilegible: {e}") from e
