"""Puerto (interfaz) para checkpoints del encoder."""
from abc import ABC, abstractmethod

from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams


class EncoderStore(ABC):
    """Interfaz para persistir parámetros del encoder."""

    @abstractmethod
    def save_encoder(
        self,
        params: EncoderParams,
        fingerprint: str,
        final_loss: float,
        model_name: str = "encoder",
    ) -> str:
        """Guarda el checkpoint y registra su metadata."""

    @abstractmethod
    def load_encoder(self, model_name: str) -> tuple[EncoderParams, str]:
        """Carga (parámetros, huella) del checkpoint registrado con ese nombre."""
