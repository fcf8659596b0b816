"""
Evaluación lineal de representaciones congeladas.
K-fold estratificado repetido, submuestreo de etiquetas en cada fold de entrenamiento.
"""
from dataclasses import dataclass, field

import numpy as np
from sklearn.model_selection import KFold, StratifiedKFold

from cgcl_analytics.application.schemas import EvalProtocol
from cgcl_analytics.domain.exceptions import InsufficientDataError, ShapeMismatchError
from cgcl_analytics.infrastructure.config.logging import logger
from cgcl_analytics.infrastructure.ml.classifier import LinearClassifier, train_linear_classifier

Split = tuple[np.ndarray, np.ndarray]


@dataclass
class EvalReport:
    """Accuracies por repetición y fold, con media y desviación poblacional."""

    dataset: str
    method: str
    accuracies: np.ndarray
    fingerprint: str = ""
    diagnostics: dict[str, int] = field(default_factory=dict)

    @property
    def mean(self) -> float:
        return float(np.mean(self.accuracies))

    @property
    def std(self) -> float:
        return float(np.std(self.accuracies))

    def rows(self) -> list[dict]:
        """Filas (dataset, method, repetition, fold, accuracy, fingerprint)."""
        return [
            {
                "dataset": self.dataset,
                "method": self.method,
                "repetition": rep,
                "fold": fold,
                "accuracy": float(acc),
                "fingerprint": self.fingerprint,
            }
            for rep, per_fold in enumerate(self.accuracies)
            for fold, acc in enumerate(per_fold)
        ]

    def summary(self) -> dict:
        return {
            "dataset": self.dataset,
            "method": self.method,
            "mean": self.mean,
            "std": self.std,
            "fingerprint": self.fingerprint,
        }


def stratified_kfold(labels: np.ndarray, folds: int, seed: int) -> list[Split]:
    """
    Particiones (train, test) estratificadas y barajadas con ``seed``.

    Si alguna clase tiene menos elementos que folds se usa KFold simple con
    una advertencia.

    Raises:
        InsufficientDataError: si folds < 2 o folds > n
    """
    labels = np.asarray(labels)
    n = labels.shape[0]
    if folds < 2:
        raise InsufficientDataError(f"Se necesitan al menos 2 folds (folds={folds})")
    if folds > n:
        raise InsufficientDataError(f"folds={folds} supera la cantidad de muestras ({n})")

    _, counts = np.unique(labels, return_counts=True)
    if counts.min() < folds:
        logger.warning(
            f"Clase con {counts.min()} muestras < {folds} folds: se usa KFold sin estratificar"
        )
        splitter = KFold(n_splits=folds, shuffle=True, random_state=seed)
    else:
        splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
    return list(splitter.split(np.zeros(n), labels))


def subsample_labels(
    train_idx: np.ndarray, labels: np.ndarray, rate: float, rng: np.random.Generator
) -> np.ndarray:
    """Fracción ``rate`` de cada clase del fold de entrenamiento, mínimo 1 por clase."""
    chosen = []
    train_labels = labels[train_idx]
    for cls in np.unique(train_labels):
        members = train_idx[train_labels == cls]
        take = max(1, int(round(rate * members.size)))
        chosen.append(rng.choice(members, size=min(take, members.size), replace=False))
    return np.sort(np.concatenate(chosen))


def evaluate(
    representations: np.ndarray,
    labels: np.ndarray,
    protocol: EvalProtocol,
    dataset: str = "",
    method: str = "",
    fingerprint: str = "",
) -> EvalReport:
    """
    Accuracy del clasificador lineal en cada fold de cada repetición.

    La repetición r usa la semilla ``protocol.seed ^ r`` para los folds; el
    clasificador se ajusta sobre la submuestra y se prueba en el fold completo.
    """
    X = np.asarray(representations, dtype=np.float64)
    y = np.asarray(labels)
    if X.ndim != 2 or X.shape[0] != y.shape[0]:
        raise ShapeMismatchError(f"{X.shape[0]} representaciones para {y.shape[0]} etiquetas")
    if np.unique(y).size < 2:
        raise InsufficientDataError("La evaluación necesita al menos 2 clases")

    accuracies = np.zeros((protocol.repetitions, protocol.folds))
    constant_fits = 0
    for rep in range(protocol.repetitions):
        splits = stratified_kfold(y, protocol.folds, protocol.seed ^ rep)
        rng = np.random.default_rng([protocol.seed, rep])
        for fold, (train_idx, test_idx) in enumerate(splits):
            fit_idx = subsample_labels(train_idx, y, protocol.label_rate, rng)
            if np.unique(y[fit_idx]).size < 2:
                clf = LinearClassifier.constant(int(y[fit_idx][0]), X.shape[1])
                constant_fits += 1
            else:
                clf = train_linear_classifier(
                    X[fit_idx], y[fit_idx], protocol.reg, protocol.classifier, protocol.seed
                )
            accuracies[rep, fold] = float(np.mean(clf.predict(X[test_idx]) == y[test_idx]))

    if constant_fits:
        logger.warning(f"{constant_fits} folds con una sola clase: predictor constante")
    report = EvalReport(
        dataset=dataset,
        method=method,
        accuracies=accuracies,
        fingerprint=fingerprint,
        diagnostics={"constant_fits": constant_fits},
    )
    logger.info(f"{dataset} {method}: {100 * report.mean:.2f} ± {100 * report.std:.2f}")
    return report
