"""Value Object de parámetros del encoder contrastivo."""
from dataclasses import dataclass

import numpy as np

from cgcl_analytics.domain.exceptions import ShapeMismatchError

PARAM_NAMES = ("W1", "b1", "W2", "b2", "W3", "b3")


@dataclass(frozen=True, eq=False)
class EncoderParams:
    """
    Pesos del MLP d → h → h → p.

    Cada W tiene forma (salida, entrada). Las dos capas ocultas usan ReLU y
    la cabeza de proyección es lineal.
    """

    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray
    W3: np.ndarray
    b3: np.ndarray

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.float64))
        d, h, p = self.dims
        expected = {
            "W1": (h, d), "b1": (h,),
            "W2": (h, h), "b2": (h,),
            "W3": (p, h), "b3": (p,),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ShapeMismatchError(
                    f"{name} tiene forma {getattr(self, name).shape}, se esperaba {shape}"
                )
        if not all(np.isfinite(getattr(self, name)).all() for name in PARAM_NAMES):
            raise ShapeMismatchError("Parámetros del encoder con valores no finitos")

    @property
    def dims(self) -> tuple[int, int, int]:
        """(d, h, p)."""
        return int(self.W1.shape[1]), int(self.W1.shape[0]), int(self.W3.shape[0])

    def arrays(self) -> list[np.ndarray]:
        return [getattr(self, name) for name in PARAM_NAMES]

    @classmethod
    def zeros(cls, d: int, h: int, p: int) -> "EncoderParams":
        return cls(
            W1=np.zeros((h, d)), b1=np.zeros(h),
            W2=np.zeros((h, h)), b2=np.zeros(h),
            W3=np.zeros((p, h)), b3=np.zeros(p),
        )
