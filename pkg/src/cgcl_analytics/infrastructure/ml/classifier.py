"""Clasificador lineal one-vs-rest (SVM lineal o regresión logística)."""
from dataclasses import dataclass

import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.multiclass import OneVsRestClassifier
from sklearn.preprocessing import StandardScaler
from sklearn.svm import LinearSVC

from cgcl_analytics.domain.exceptions import ConfigurationError, InsufficientDataError


@dataclass(frozen=True, eq=False)
class LinearClassifier:
    """
    Función de decisión lineal: scores = X·Wᵀ + b, predicción = argmax.

    Con dos clases el score s del modelo binario se expone como [-s, s].
    La estandarización del entrenamiento ya está plegada en W y b.
    """

    weights: np.ndarray
    bias: np.ndarray
    classes: np.ndarray

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(X, dtype=np.float64) @ self.weights.T + self.bias

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.classes[np.argmax(self.decision_function(X), axis=1)]

    @classmethod
    def constant(cls, label: int, d: int) -> "LinearClassifier":
        """Predictor constante para subconjuntos de entrenamiento con una sola clase."""
        return cls(weights=np.zeros((1, d)), bias=np.zeros(1), classes=np.array([label]))


def train_linear_classifier(
    X: np.ndarray,
    y: np.ndarray,
    reg: float = 10.0,
    kind: str = "svm",
    seed: int = 0,
) -> LinearClassifier:
    """
    Ajusta un clasificador lineal regularizado.

    La fuerza es C = reg / n para que el objetivo sea un promedio por muestra:
    duplicar todas las filas no cambia la solución.

    Raises:
        InsufficientDataError: si hay menos de dos clases
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    classes = np.unique(y)
    if classes.size < 2:
        raise InsufficientDataError(f"Se necesitan al menos 2 clases (hay {classes.size})")

    scaler = StandardScaler().fit(X)
    Xs = scaler.transform(X)
    C = reg / X.shape[0]

    if kind == "svm":
        model = LinearSVC(C=C, dual=False, tol=1e-8, max_iter=100_000, random_state=seed)
        model.fit(Xs, y)
        coef, intercept = model.coef_, model.intercept_
    elif kind == "logistic":
        model = OneVsRestClassifier(LogisticRegression(C=C, tol=1e-10, max_iter=10_000))
        model.fit(Xs, y)
        coef = np.vstack([est.coef_ for est in model.estimators_])
        intercept = np.concatenate([est.intercept_ for est in model.estimators_])
    else:
        raise ConfigurationError(f"Clasificador desconocido: {kind}")

    if classes.size == 2:
        coef = np.vstack([-coef[0], coef[0]])
        intercept = np.array([-intercept[0], intercept[0]])

    weights = coef / scaler.scale_
    bias = intercept - weights @ scaler.mean_
    return LinearClassifier(weights=weights, bias=bias, classes=classes)
