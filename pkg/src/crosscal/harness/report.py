"""Accuracy aggregation sliced by evaluation date, reasoning type,
question format, and direction group, with optional significance tests
on the three standard pairings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ..calendars import format_date
from ..errors import UnmatchedVerdict
from ..templates import Direction, EvalInstance, QuestionFormat, ReasoningType
from .client import ResponseRecord
from .judge import JudgeVerdict
from .stats import bootstrap_diff


@dataclass
class SliceStats:
    total: int = 0
    correct: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0

    def add(self, accuracy: int) -> None:
        self.total += 1
        self.correct += accuracy

    def to_dict(self) -> dict:
        return {"total": self.total, "correct": self.correct,
                "accuracy": self.accuracy}


@dataclass
class RunReport:
    overall: SliceStats
    by_evaluation_date: dict[str, SliceStats]
    by_reasoning_type: dict[str, SliceStats]
    by_question_format: dict[str, SliceStats]
    by_direction: dict[str, SliceStats]
    response_chars_mean: float
    response_tokens_mean: float | None = None
    significance: dict[str, dict] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "overall": self.overall.to_dict(),
            "by_evaluation_date": {k: v.to_dict() for k, v in
                                   sorted(self.by_evaluation_date.items())},
            "by_reasoning_type": {k: v.to_dict() for k, v in
                                  self.by_reasoning_type.items()},
            "by_question_format": {k: v.to_dict() for k, v in
                                   self.by_question_format.items()},
            "by_direction": {k: v.to_dict() for k, v in
                             self.by_direction.items()},
            "response_chars_mean": self.response_chars_mean,
            "response_tokens_mean": self.response_tokens_mean,
            "significance": self.significance,
        }

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n",
                              encoding="utf-8")


_PAIRINGS = (
    ("festival_vs_date", ReasoningType.FESTIVAL_BASED.value,
     ReasoningType.DATE_BASED.value),
    ("polar_vs_content", QuestionFormat.POLAR.value,
     QuestionFormat.CONTENT.value),
    ("gregorian_to_others_vs_reverse", Direction.GREGORIAN_TO_OTHERS.value,
     Direction.OTHERS_TO_GREGORIAN.value),
)


def aggregate(verdicts: Sequence[JudgeVerdict],
              instances: Sequence[EvalInstance],
              records: Sequence[ResponseRecord] | None = None,
              with_significance: bool = False,
              bootstrap_iterations: int = 10000,
              seed: int = 0) -> RunReport:
    """Join verdicts to instances and compute per-slice accuracies.

    Order-insensitive; raises UnmatchedVerdict for ids outside the run.
    """
    by_id = {inst.id: inst for inst in instances}
    overall = SliceStats()
    by_date: dict[str, SliceStats] = {}
    by_type: dict[str, SliceStats] = {}
    by_format: dict[str, SliceStats] = {}
    by_direction: dict[str, SliceStats] = {}
    groups: dict[str, list[int]] = {}
    chars = 0

    for v in verdicts:
        inst = by_id.get(v.instance_id)
        if inst is None:
            raise UnmatchedVerdict(f"verdict for unknown instance "
                                   f"{v.instance_id!r}")
        recipe = inst.recipe
        keys = (
            (by_date, format_date(inst.evaluation_date)),
            (by_type, recipe.reasoning_type.value),
            (by_format, inst.template.question_format.value),
            (by_direction, recipe.direction.value),
        )
        overall.add(v.accuracy)
        for table, key in keys:
            table.setdefault(key, SliceStats()).add(v.accuracy)
            groups.setdefault(key, []).append(v.accuracy)
        chars += len(v.response)

    tokens = _mean_tokens(records)
    report = RunReport(
        overall=overall,
        by_evaluation_date=by_date,
        by_reasoning_type=by_type,
        by_question_format=by_format,
        by_direction=by_direction,
        response_chars_mean=chars / len(verdicts) if verdicts else 0.0,
        response_tokens_mean=tokens,
    )
    if with_significance:
        for name, key_a, key_b in _PAIRINGS:
            if groups.get(key_a) and groups.get(key_b):
                result = bootstrap_diff(groups[key_a], groups[key_b],
                                        iterations=bootstrap_iterations,
                                        seed=seed)
                report.significance[name] = result.to_dict()
    return report


def _mean_tokens(records: Sequence[ResponseRecord] | None) -> float | None:
    if not records:
        return None
    counts = [r.usage.get("completion_tokens") for r in records
              if r.usage and r.usage.get("completion_tokens") is not None]
    if not counts:
        return None
    return sum(counts) / len(counts)
