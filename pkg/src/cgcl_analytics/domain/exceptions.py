"""Excepciones del dominio.

Cada excepción lleva un ``code`` estable que la CLI imprime en su línea de
error, para que los scripts puedan distinguir fallos sin parsear el mensaje.
"""


class CgclError(ValueError):
    """Error base de la aplicación."""

    code = "cgcl_error"


class InvalidGraphError(CgclError):
    """Grafo mal formado: self-loops, aristas duplicadas o nodos fuera de rango."""

    code = "invalid_graph"


class InvalidLeaderConfigError(CgclError):
    """Conjunto de líderes vacío, repetido o fuera de rango."""

    code = "invalid_leaders"


class StabilityError(CgclError):
    """El bloque de seguidores A no es definido positivo.

    Ocurre cuando alguna componente conexa no tiene líder: la dinámica de esos
    seguidores no es asintóticamente estable y el Gramiano infinito no existe.
    """

    code = "unstable_follower_block"


class UnreachableStateError(CgclError):
    """El estado objetivo no pertenece al subespacio controlable."""

    code = "unreachable_state"


class UnknownNodeError(CgclError):
    """Un nodo de la secuencia no aparece en el mapa de vectores DL."""

    code = "unknown_node"


class InexactPmiError(CgclError):
    """Se pidió una operación que exige el régimen exacto de PMI."""

    code = "pmi_not_exact"


class AugmentationConsistencyError(CgclError):
    """La verificación final del conjunto maximal de adición falló (bug interno)."""

    code = "augmentation_inconsistent"


class DatasetFormatError(CgclError):
    """Archivo TUDataset faltante o con contenido inválido."""

    code = "dataset_format"


class CacheFormatError(CgclError):
    """Cache binario truncado o con esquema inválido."""

    code = "cache_format"


class VersionMismatchError(CacheFormatError):
    """Cabecera binaria con magic o versión desconocidos."""

    code = "version_mismatch"


class ShapeMismatchError(CgclError):
    """Dimensiones incompatibles entre parámetros y datos."""

    code = "shape_mismatch"


class InsufficientDataError(CgclError):
    """Datos insuficientes: dataset vacío, batch < 2, una sola clase, folds < 2."""

    code = "insufficient_data"


class AuditFailedError(CgclError):
    """La auditoría de aumentación detectó que δ disminuyó."""

    code = "audit_failed"


class ConfigurationError(CgclError):
    """Parámetros de configuración inválidos o incompatibles."""

    code = "configuration"
