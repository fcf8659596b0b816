"""Encoder MLP sobre vectores CTRL estandarizados."""
import numpy as np
import torch
import torch.nn as nn

from cgcl_analytics.domain.exceptions import ConfigurationError, ShapeMismatchError
from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams

DTYPE = torch.float64


class CtrlEncoder(nn.Module):
    """d → h → h con ReLU, más cabeza de proyección lineal h → p."""

    def __init__(self, d: int, h: int = 128, p: int = 64):
        super().__init__()
        self.hidden = nn.Sequential(
            nn.Linear(d, h, dtype=DTYPE),
            nn.ReLU(),
            nn.Linear(h, h, dtype=DTYPE),
            nn.ReLU(),
        )
        self.projection_head = nn.Linear(h, p, dtype=DTYPE)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.projection_head(self.hidden(x))

    @property
    def layers(self) -> list[nn.Linear]:
        return [self.hidden[0], self.hidden[2], self.projection_head]

    @classmethod
    def from_params(cls, params: EncoderParams) -> "CtrlEncoder":
        d, h, p = params.dims
        model = cls(d, h, p)
        arrays = params.arrays()
        with torch.no_grad():
            for layer, weight, bias in zip(model.layers, arrays[0::2], arrays[1::2]):
                layer.weight.copy_(torch.from_numpy(weight))
                layer.bias.copy_(torch.from_numpy(bias))
        return model

    def to_params(self) -> EncoderParams:
        values = []
        for layer in self.layers:
            values += [
                layer.weight.detach().cpu().numpy().copy(),
                layer.bias.detach().cpu().numpy().copy(),
            ]
        return EncoderParams(*values)


def init_params(d: int, h: int, p: int, seed: int, init: str = "uniform") -> EncoderParams:
    """
    Parámetros iniciales reproducibles.

    ``uniform``: pesos y sesgos en U(-1/√fan_in, 1/√fan_in) con un
    ``torch.Generator`` sembrado. ``identity``: matrices identidad y sesgos
    nulos, solo válido con h = p = d.
    """
    if init == "identity":
        if not d == h == p:
            raise ConfigurationError(f"init='identity' exige d = h = p (d={d}, h={h}, p={p})")
        eye = np.eye(d)
        zero = np.zeros(d)
        return EncoderParams(eye, zero, eye.copy(), zero.copy(), eye.copy(), zero.copy())
    if init != "uniform":
        raise ConfigurationError(f"Inicialización desconocida: {init}")

    generator = torch.Generator().manual_seed(int(seed))
    arrays = []
    for fan_in, fan_out in ((d, h), (h, h), (h, p)):
        bound = 1.0 / np.sqrt(fan_in)
        for shape in ((fan_out, fan_in), (fan_out,)):
            tensor = torch.rand(shape, generator=generator, dtype=DTYPE) * 2 * bound - bound
            arrays.append(tensor.numpy())
    return EncoderParams(*arrays)


def _check_input(params: EncoderParams, x: np.ndarray, ndim: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    d = params.dims[0]
    if x.ndim != ndim or x.shape[-1] != d:
        raise ShapeMismatchError(f"Entrada con forma {x.shape}, el encoder espera dimensión {d}")
    return x


def encoder_forward(params: EncoderParams, x: np.ndarray) -> np.ndarray:
    """Vector latente z (p,) de un vector CTRL estandarizado (d,)."""
    x = _check_input(params, x, ndim=1)
    return encode_all(params, x[None, :])[0]


def encode_all(params: EncoderParams, X: np.ndarray) -> np.ndarray:
    """Aplica el encoder fila a fila; conserva el orden."""
    X = _check_input(params, X, ndim=2)
    model = CtrlEncoder.from_params(params)
    model.eval()
    with torch.no_grad():
        return model(torch.from_numpy(X)).numpy()
