"""Bootstrap significance testing and judge-agreement metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import stats as sps

from ..errors import EmptyGroup, LengthMismatch


@dataclass
class BootstrapResult:
    mean_difference: float
    ci_low: float
    ci_high: float
    p_value: float
    iterations: int
    samples: np.ndarray = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "mean_difference": self.mean_difference,
            "ci_95": [self.ci_low, self.ci_high],
            "p_value": self.p_value,
            "iterations": self.iterations,
        }


def _is_binary(a: np.ndarray) -> bool:
    return bool(np.isin(a, (0, 1)).all())


def bootstrap_diff(group_a, group_b, iterations: int = 10000,
                   seed: int = 0) -> BootstrapResult:
    """Percentile-bootstrap comparison of two accuracy groups.

    Resamples each group with replacement `iterations` times and returns
    the mean difference (A minus B), the 95% percentile confidence
    interval, and a two-sided p-value with add-one smoothing so zero is
    never reported.  Seeded and reproducible.
    """
    a = np.asarray(list(group_a), dtype=float)
    b = np.asarray(list(group_b), dtype=float)
    if a.size == 0 or b.size == 0:
        raise EmptyGroup("both groups must be non-empty")
    rng = np.random.default_rng(seed)
    if _is_binary(a) and _is_binary(b):
        # resampling n 0/1 values with replacement is a binomial draw
        ka = rng.binomial(a.size, a.mean(), size=iterations)
        kb = rng.binomial(b.size, b.mean(), size=iterations)
        samples = ka / a.size - kb / b.size
    else:
        ia = rng.integers(0, a.size, size=(iterations, a.size))
        ib = rng.integers(0, b.size, size=(iterations, b.size))
        samples = a[ia].mean(axis=1) - b[ib].mean(axis=1)
    lo, hi = np.percentile(samples, [2.5, 97.5])
    tail = min(int((samples <= 0).sum()), int((samples >= 0).sum()))
    p_value = min(1.0, 2.0 * (tail + 1) / (iterations + 1))
    return BootstrapResult(
        mean_difference=float(a.mean() - b.mean()),
        ci_low=float(lo),
        ci_high=float(hi),
        p_value=float(p_value),
        iterations=iterations,
        samples=samples,
    )


@dataclass
class AgreementMetrics:
    accuracy: float
    spearman: float
    kendall: float
    kappa: float
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "agreement_accuracy": self.accuracy,
            "spearman": self.spearman,
            "kendall": self.kendall,
            "cohen_kappa": self.kappa,
            "degenerate": self.degenerate,
        }


def agreement_metrics(judge_labels, human_labels) -> AgreementMetrics:
    """Agreement between paired binary label sequences.

    When either side has zero variance the correlation statistics are
    undefined; they are reported as 0.0 with the degenerate flag set.
    """
    a = np.asarray(list(judge_labels), dtype=int)
    b = np.asarray(list(human_labels), dtype=int)
    if a.size != b.size:
        raise LengthMismatch(f"label lengths differ: {a.size} != {b.size}")
    if a.size == 0:
        raise LengthMismatch("label sequences are empty")
    accuracy = float((a == b).mean())
    if a.std() == 0 or b.std() == 0:
        return AgreementMetrics(accuracy, 0.0, 0.0, 0.0, degenerate=True)
    spearman = float(sps.spearmanr(a, b).statistic)
    kendall = float(sps.kendalltau(a, b).statistic)
    # Cohen's kappa on binary labels
    pe = 0.0
    for cls in (0, 1):
        pe += float((a == cls).mean()) * float((b == cls).mean())
    kappa = 0.0 if pe == 1.0 else (accuracy - pe) / (1.0 - pe)
    return AgreementMetrics(accuracy, spearman, kendall, float(kappa))
