"""Evaluation metrics and the relative-change series used for comparisons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class IterationMetrics:
    """One row of the experiment grid. NaN marks metrics that were undefined
    on a degenerate cell (e.g. one-row training set)."""

    iteration: int
    kept_fraction: float
    train_size: int
    r2_train: float
    r2_test: float
    mse_test: float
    degenerate: bool = False


def mse(y_true, y_pred) -> float:
    y_true = np.asarray(y_true, dtype=np.float64)
    y_pred = np.asarray(y_pred, dtype=np.float64)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.shape} vs {y_pred.shape}")
    if y_true.size == 0:
        raise ValueError("mse undefined for empty vectors")
    return float(np.mean((y_true - y_pred) ** 2))


def r2(y_true, y_pred) -> float:
    """Coefficient of determination, 1 - SS_res/SS_tot about mean(y_true)."""
    y_true = np.asarray(y_true, dtype=np.float64)
    y_pred = np.asarray(y_pred, dtype=np.float64)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.shape} vs {y_pred.shape}")
    if y_true.size < 2:
        raise ValueError("r2 needs at least 2 points")
    mean = np.mean(y_true)
    ss_tot = float(np.sum((y_true - mean) ** 2))
    if ss_tot == 0.0:
        raise ValueError("undefined R² for constant target")
    ss_res = float(np.sum((y_true - y_pred) ** 2))
    return 1.0 - ss_res / ss_tot


def relative_change_series(values) -> list[float]:
    """Per-element change relative to the first value: (v_k - v_0) / |v_0|."""
    values = [float(v) for v in values]
    if not values:
        raise ValueError("empty series")
    base = values[0]
    if base == 0.0:
        raise ValueError("relative change undefined for zero baseline")
    out = [0.0]
    for v in values[1:]:
        out.append((v - base) / abs(base))
    return out
