"""Derivación de semillas por etapa a partir de la semilla global."""
import hashlib

SEED_MASK = (1 << 63) - 1


def derive_seed(seed: int, stage: str, *keys: object) -> int:
    """
    Semilla independiente para una etapa del pipeline.

    Primeros 8 bytes de SHA-256 sobre ``"{seed}|{stage}|{k1}|..."``, con el
    bit alto en cero para que sea un entero no negativo de 63 bits.
    """
    payload = "|".join([str(seed), stage, *(str(k) for k in keys)])
    digest = hashlib.sha256(payload.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & SEED_MASK
