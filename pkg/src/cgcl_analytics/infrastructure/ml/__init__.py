"""Encoder contrastivo, pérdida NT-Xent y evaluación lineal."""
