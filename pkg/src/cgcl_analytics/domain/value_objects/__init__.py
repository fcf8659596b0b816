"""Value Objects del dominio."""
from cgcl_analytics.domain.value_objects.augmentation import (
    AugmentationAudit,
    AugmentationKind,
    AugmentationSpec,
    Backbone,
    MaximalAdditionSet,
)
from cgcl_analytics.domain.value_objects.embedding import CtrlEmbedding, EmbeddingMatrix
from cgcl_analytics.domain.value_objects.encoder_params import EncoderParams
from cgcl_analytics.domain.value_objects.gramian_report import ControllabilityRank, GramianReport
from cgcl_analytics.domain.value_objects.leader_policy import LeaderPolicy, LeaderStrategy
from cgcl_analytics.domain.value_objects.pmi import DeltaBound, DlVector, PmiSequence

__all__ = [
    "AugmentationAudit",
    "AugmentationKind",
    "AugmentationSpec",
    "Backbone",
    "ControllabilityRank",
    "CtrlEmbedding",
    "DeltaBound",
    "DlVector",
    "EmbeddingMatrix",
    "EncoderParams",
    "GramianReport",
    "LeaderPolicy",
    "LeaderStrategy",
    "MaximalAdditionSet",
    "PmiSequence",
]
