"""Reparto de trabajo por grafo con joblib."""
from collections.abc import Callable, Iterable

from joblib import Parallel, delayed


def joblib_mapper(n_jobs: int = 1) -> Callable[[Callable, Iterable], list]:
    """
    ``map`` paralelo con el mismo contrato que el builtin.

    Los resultados vuelven en el orden de entrada, así que la salida no
    depende de ``n_jobs``.
    """

    def mapper(fn: Callable, items: Iterable) -> list:
        return Parallel(n_jobs=n_jobs)(delayed(fn)(item) for item in items)

    return mapper
