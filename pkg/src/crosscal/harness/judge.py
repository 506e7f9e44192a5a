"""Response judging.

The local judge normalizes both sides to structured values before
comparing, so date format differences never flip a verdict: "2020-07-05"
and "July 5, 2020" are the same answer.  The LLM judge sends the stored
evaluation prompt to a judge model and reads back the accuracy field;
unparseable judge output is recorded as a failure, never guessed.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import TYPE_CHECKING, Sequence

from ..calendars import gregorian, hebrew, islamic, persian, shaka
from ..errors import JudgeParseFailure

if TYPE_CHECKING:  # pragma: no cover
    from ..templates import EvalInstance
    from .client import ModelClient, ResponseRecord


class JudgeKind(enum.Enum):
    LOCAL = "local"
    LLM = "llm"


@dataclass
class JudgeVerdict:
    instance_id: str
    response: str
    accuracy: int  # 1 correct, 0 incorrect
    judge_kind: JudgeKind
    note: str | None = None


def _month_lookup() -> dict[str, int]:
    """Flat month-name -> number map across all calendars, including the
    parenthesized alternates.  Names are distinct across calendars."""
    table: dict[str, int] = {}
    for module in (gregorian, hebrew, islamic, persian, shaka):
        for num, name in enumerate(module.MONTH_NAMES, start=1):
            for variant in _name_variants(name):
                existing = table.get(variant)
                if existing is not None and existing != num:
                    raise AssertionError(f"ambiguous month name {variant!r}")
                table[variant] = num
    return table


def _name_variants(name: str) -> list[str]:
    variants = [name.lower()]
    m = re.match(r"^(.*?)\s*\((.*?)\)$", name)
    if m:
        variants.append(m.group(1).strip().lower())
        variants.append(m.group(2).strip().lower())
    return variants


_MONTHS = _month_lookup()

_NUMERIC = re.compile(r"^(\d{1,4})-(\d{1,2})(l?)-(\d{1,2})$")
_NAME_FIRST = re.compile(r"^([a-z' .\-()]+?)\s+(\d{1,2})\s*,\s*(\d{1,4})$")
_DAY_FIRST = re.compile(r"^(\d{1,2})\s+([a-z' .\-()]+?)\s*,?\s*(\d{1,4})$")
_LUNAR = re.compile(
    r"^(leap\s+)?month\s+(\d{1,2})\s+day\s+(\d{1,2})\s*,\s*(\d{1,4})"
    r"\s*(\(leap\))?$")


def _clean(text: str) -> str:
    text = text.strip().strip('"“”').strip()
    text = text.rstrip(".").strip()
    return text


def normalize_answer(text: str):
    """Reduce an answer to a comparable value.

    Returns ("yesno", bool), ("date", (year, month, day, leap)), or
    ("text", folded string) when nothing structured parses.
    """
    cleaned = _clean(text)
    lowered = cleaned.lower()
    if lowered in ("yes", "no"):
        return ("yesno", lowered == "yes")

    m = _LUNAR.match(lowered)
    if m:
        leap = bool(m.group(1) or m.group(5))
        return ("date", (int(m.group(4)), int(m.group(2)), int(m.group(3)),
                         leap))
    m = _NUMERIC.match(lowered)
    if m:
        return ("date", (int(m.group(1)), int(m.group(2)), int(m.group(4)),
                         m.group(3) == "l"))
    m = _NAME_FIRST.match(lowered)
    if m:
        month = _MONTHS.get(m.group(1).strip())
        if month is not None:
            return ("date", (int(m.group(3)), month, int(m.group(2)), False))
    m = _DAY_FIRST.match(lowered)
    if m:
        month = _MONTHS.get(m.group(2).strip())
        if month is not None:
            return ("date", (int(m.group(3)), month, int(m.group(1)), False))
    return ("text", lowered)


def _local_accuracy(response: str, gold: str) -> int:
    return int(normalize_answer(response) == normalize_answer(gold))


def _judge_prompt() -> str:
    return (resources.files("crosscal.data") / "judge_prompt.txt"
            ).read_text(encoding="utf-8")


_ACCURACY_RE = re.compile(r'"accuracy"\s*:\s*"?([01])"?')


def _llm_accuracy(question: str, response: str, gold: str,
                  client: "ModelClient") -> int:
    prompt = (f"{_judge_prompt()}\n"
              f"question: {question}\n"
              f"response: {response}\n"
              f"answer: {gold}\n")
    reply = client.complete(prompt)
    m = _ACCURACY_RE.search(reply)
    if m:
        return int(m.group(1))
    try:
        value = json.loads(reply).get("accuracy")
        if str(value) in ("0", "1"):
            return int(value)
    except (ValueError, AttributeError):
        pass
    raise JudgeParseFailure(f"no accuracy field in judge reply: {reply[:200]!r}")


def judge(question: str, response: str, gold: str,
          kind: JudgeKind = JudgeKind.LOCAL,
          judge_client: "ModelClient | None" = None,
          instance_id: str = "") -> JudgeVerdict:
    """Score one response against the gold answer."""
    if kind is JudgeKind.LOCAL:
        return JudgeVerdict(instance_id, response,
                            _local_accuracy(response, gold), kind)
    if judge_client is None:
        raise ValueError("LLM judging needs a judge_client")
    try:
        accuracy = _llm_accuracy(question, response, gold, judge_client)
    except JudgeParseFailure as exc:
        return JudgeVerdict(instance_id, response, 0, kind,
                            note=f"judge_parse_failure: {exc}")
    return JudgeVerdict(instance_id, response, accuracy, kind)


def judge_all(instances: Sequence["EvalInstance"],
              records: Sequence["ResponseRecord"],
              kind: JudgeKind = JudgeKind.LOCAL,
              judge_client: "ModelClient | None" = None) -> list[JudgeVerdict]:
    """Judge a full run; records must align with instances by id."""
    by_id = {r.instance_id: r for r in records}
    verdicts = []
    for inst in instances:
        record = by_id.get(inst.id)
        response = record.response if record else ""
        v = judge(inst.question, response, inst.gold_answer, kind,
                  judge_client, instance_id=inst.id)
        if record is not None and record.error:
            v.note = (v.note + "; " if v.note else "") + record.error
        verdicts.append(v)
    return verdicts
