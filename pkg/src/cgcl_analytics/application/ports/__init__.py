from cgcl_analytics.application.ports.dataset_repository import DatasetRepository
from cgcl_analytics.application.ports.embedding_store import EmbeddingStore
from cgcl_analytics.application.ports.encoder_store import EncoderStore

__all__ = ["DatasetRepository", "EmbeddingStore", "EncoderStore"]
