"""Entidades del dominio."""
from cgcl_analytics.domain.entities.dataset import Dataset
from cgcl_analytics.domain.entities.graph import Graph, LeaderConfig, PartitionedLaplacian

__all__ = ["Dataset", "Graph", "LeaderConfig", "PartitionedLaplacian"]
