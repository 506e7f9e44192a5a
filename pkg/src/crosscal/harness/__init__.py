"""Model evaluation harness: response collection, judging, aggregation,
and the statistical apparatus for slice comparisons."""

from .client import (
    GoldResponder,
    ModelClient,
    NoisyResponder,
    ResponseRecord,
    run_model,
)
from .judge import JudgeKind, JudgeVerdict, judge, judge_all, normalize_answer
from .report import RunReport, SliceStats, aggregate
from .stats import AgreementMetrics, BootstrapResult, agreement_metrics, bootstrap_diff

__all__ = [
    "AgreementMetrics",
    "BootstrapResult",
    "GoldResponder",
    "JudgeKind",
    "JudgeVerdict",
    "ModelClient",
    "NoisyResponder",
    "ResponseRecord",
    "RunReport",
    "SliceStats",
    "aggregate",
    "agreement_metrics",
    "bootstrap_diff",
    "judge",
    "judge_all",
    "normalize_answer",
    "run_model",
]
