"""Servicios de dominio."""
from cgcl_analytics.domain.services.augmentation import ControlPreservingAugmenter
from cgcl_analytics.domain.services.controllability import ControllabilityAnalyzer
from cgcl_analytics.domain.services.pmi import PmiAnalyzer

__all__ = ["ControlPreservingAugmenter", "ControllabilityAnalyzer", "PmiAnalyzer"]
