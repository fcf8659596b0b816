"""Casos de uso de la aplicación."""
from cgcl_analytics.application.use_cases.aumentar_dataset import AumentarDataset
from cgcl_analytics.application.use_cases.calcular_embeddings import CalcularEmbeddings
from cgcl_analytics.application.use_cases.evaluar_representaciones import EvaluarRepresentaciones
from cgcl_analytics.application.use_cases.generar_reporte_ablacion import GenerarReporteAblacion
from cgcl_analytics.application.use_cases.ingerir_dataset import IngerirDataset
from cgcl_analytics.application.use_cases.preentrenar_encoder import PreentrenarEncoder

__all__ = [
    "AumentarDataset",
    "CalcularEmbeddings",
    "EvaluarRepresentaciones",
    "GenerarReporteAblacion",
    "IngerirDataset",
    "PreentrenarEncoder",
]
