"""CGCL Analytics: embeddings de controlabilidad y aprendizaje contrastivo sobre grafos."""

__version__ = "0.1.0"
