"""Three-step tool-augmented agent: a model proposes a structured plan,
a sandboxed interpreter executes it against the conversion facade, and
the result is rendered into a final answer.

Plans are a closed grammar of four step kinds (calendar lookup, day
shifting, date comparison, emit), so execution can have no effect other
than computing a date or a boolean; the sandbox property holds by
construction.  Parsing failures get one retry with the parse error
appended to the prompt; execution failures are never retried, since an
executed-but-wrong plan is exactly the model error the benchmark should
surface.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Protocol, Sequence

from .calendars import CalendarDate, CalendarId, add_days, convert
from .errors import CrosscalError, ExecutionError, PlanParseFailure
from .facade import CrossCalendarEntry, SearchRequest, search_calendar
from .harness.client import ModelClient
from .templates import (
    AnswerRecipe,
    EvalInstance,
    QuestionFormat,
    RenderStyle,
    dates_equal,
    render_date,
)

MAX_STEPS = 16


@dataclass(frozen=True)
class PlanStep:
    op: str
    bind: str | None
    args: dict


@dataclass(frozen=True)
class AgentPlan:
    steps: tuple[PlanStep, ...]


@dataclass
class AgentTranscript:
    question: str
    raw_plan: str
    plan: AgentPlan | None = None
    result: CalendarDate | bool | None = None
    final_answer: str | None = None
    error: str | None = None
    instance_id: str = ""

    def to_record(self) -> dict:
        result = self.result
        if isinstance(result, CalendarDate):
            result = str(result)
        return {
            "instance_id": self.instance_id,
            "question": self.question,
            "raw_plan": self.raw_plan,
            "result": result,
            "final_answer": self.final_answer,
            "error": self.error,
        }


# ---------------------------------------------------------------------------
# parsing

_OPS = ("search_calendar", "shift_days", "compare_date", "emit")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_FENCE_RE = re.compile(r"```(?:json)?\s*(.*?)```", re.S)


def _extract_json(text: str):
    candidates = [text.strip()]
    candidates.extend(m.strip() for m in _FENCE_RE.findall(text))
    start = text.find("[")
    if start != -1:
        candidates.append(text[start:text.rfind("]") + 1])
    for candidate in candidates:
        if not candidate:
            continue
        try:
            return json.loads(candidate)
        except ValueError:
            continue
    raise PlanParseFailure("no JSON plan found in planner output")


def _parse_inline_date(obj) -> CalendarDate:
    if not isinstance(obj, dict):
        raise PlanParseFailure(f"expected a date object, got {obj!r}")
    try:
        calendar = CalendarId.parse(str(obj["calendar"]))
        return CalendarDate(calendar, int(obj["year"]), int(obj["month"]),
                            int(obj["day"]), bool(obj.get("leap_month", False)))
    except (KeyError, ValueError, TypeError) as exc:
        raise PlanParseFailure(f"bad date object {obj!r}: {exc}") from exc


def parse_plan(text: str) -> AgentPlan:
    """Parse planner output into a validated plan.

    Enforces the closed grammar: known ops only, at most 16 steps,
    unique bind names, references only to earlier bindings, and exactly
    one emit as the final step.
    """
    data = _extract_json(text)
    if not isinstance(data, list) or not data:
        raise PlanParseFailure("plan must be a non-empty JSON array")
    if len(data) > MAX_STEPS:
        raise PlanParseFailure(f"plan exceeds {MAX_STEPS} steps")
    steps: list[PlanStep] = []
    bound: set[str] = set()
    emits = 0
    for i, raw in enumerate(data):
        if not isinstance(raw, dict) or "op" not in raw:
            raise PlanParseFailure(f"step {i} is not an op object")
        op = raw["op"]
        if op not in _OPS:
            raise PlanParseFailure(f"step {i}: unknown op {op!r}")
        args = {k: v for k, v in raw.items() if k not in ("op", "bind")}
        bind = raw.get("bind")
        if op == "emit":
            emits += 1
            if "value" not in args:
                raise PlanParseFailure(f"step {i}: emit needs a value")
            _check_ref(args["value"], bound, i)
        else:
            if not isinstance(bind, str) or not _NAME_RE.match(bind):
                raise PlanParseFailure(f"step {i}: op {op!r} needs a bind name")
            if bind in bound:
                raise PlanParseFailure(f"step {i}: duplicate bind {bind!r}")
        _validate_step(op, args, bound, i)
        if bind:
            bound.add(bind)
        steps.append(PlanStep(op, bind, args))
    if emits != 1 or steps[-1].op != "emit":
        raise PlanParseFailure("plan must end with its single emit step")
    return AgentPlan(tuple(steps))


def _check_ref(value, bound: set[str], i: int) -> None:
    if not isinstance(value, str):
        raise PlanParseFailure(f"step {i}: reference must be a string")
    name = value.split(".", 1)[0]
    if name not in bound:
        raise PlanParseFailure(f"step {i}: reference to unbound name {name!r}")


def _validate_step(op: str, args: dict, bound: set[str], i: int) -> None:
    if op == "shift_days":
        if "date" not in args or "days" not in args:
            raise PlanParseFailure(f"step {i}: shift_days needs date and days")
        if not isinstance(args["days"], int):
            raise PlanParseFailure(f"step {i}: days must be an integer")
        _check_date_arg(args["date"], bound, i)
    elif op == "compare_date":
        if "date" not in args or "expected" not in args:
            raise PlanParseFailure(
                f"step {i}: compare_date needs date and expected")
        _check_date_arg(args["date"], bound, i)
        _parse_inline_date(args["expected"])
    elif op == "search_calendar":
        if "date" in args:
            _check_date_arg(args["date"], bound, i)
        elif "calendar" in args and "year" in args:
            has_md = "month" in args and "day" in args
            if not has_md and "festival" not in args and "event" not in args:
                raise PlanParseFailure(
                    f"step {i}: search_calendar needs month+day or a festival")
        else:
            raise PlanParseFailure(
                f"step {i}: search_calendar needs a date or calendar+year")


def _check_date_arg(value, bound: set[str], i: int) -> None:
    if isinstance(value, str):
        _check_ref(value, bound, i)
    else:
        _parse_inline_date(value)


# ---------------------------------------------------------------------------
# execution

_FIELD_SUFFIX = re.compile(r"_date$")


def _resolve_ref(env: dict, ref: str, i: int):
    name, _, fld = ref.partition(".")
    value = env[name]
    if not fld:
        return value
    if not isinstance(value, CrossCalendarEntry):
        raise ExecutionError(i, f"{name!r} is not a calendar entry")
    try:
        calendar = CalendarId.parse(_FIELD_SUFFIX.sub("", fld))
    except ValueError as exc:
        raise ExecutionError(i, str(exc)) from exc
    return value.date(calendar)


def _as_date(env: dict, value, i: int) -> CalendarDate:
    resolved = _resolve_ref(env, value, i) if isinstance(value, str) \
        else _parse_inline_date(value)
    if isinstance(resolved, CrossCalendarEntry):
        raise ExecutionError(i, "expected a date, got a calendar entry; "
                                "address one field, e.g. name.gregorian")
    if not isinstance(resolved, CalendarDate):
        raise ExecutionError(i, f"expected a date, got {type(resolved).__name__}")
    return resolved


def execute_plan(plan: AgentPlan) -> CalendarDate | bool:
    """Deterministically interpret a validated plan; every lookup goes
    through the conversion facade and nothing else is reachable."""
    env: dict[str, object] = {}
    for i, step in enumerate(plan.steps):
        try:
            if step.op == "shift_days":
                date = _as_date(env, step.args["date"], i)
                env[step.bind] = add_days(date, step.args["days"])
            elif step.op == "search_calendar":
                env[step.bind] = _run_search(env, step.args, i)
            elif step.op == "compare_date":
                date = _as_date(env, step.args["date"], i)
                expected = _parse_inline_date(step.args["expected"])
                env[step.bind] = dates_equal(
                    convert(date, expected.calendar), expected)
            else:  # emit
                value = _resolve_ref(env, step.args["value"], i)
                if isinstance(value, CrossCalendarEntry):
                    raise ExecutionError(
                        i, "emit needs a date or boolean, not a full entry")
                return value
        except ExecutionError:
            raise
        except CrosscalError as exc:
            raise ExecutionError(i, str(exc)) from exc
    raise ExecutionError(len(plan.steps) - 1, "plan finished without emit")


def _run_search(env: dict, args: dict, i: int) -> CrossCalendarEntry:
    if "date" in args:
        date = _as_date(env, args["date"], i)
        req = SearchRequest(date.calendar, date.year, date.month, date.day,
                            is_lunar_leap_month=date.is_leap_month)
        return search_calendar(req)
    calendar = CalendarId.parse(str(args["calendar"]))
    festival = args.get("festival", args.get("event"))
    req = SearchRequest(
        calendar, int(args["year"]),
        month=args.get("month"), day=args.get("day"),
        festival_name=festival,
        is_lunar_leap_month=bool(args.get("is_lunar_leap_month", False)))
    return search_calendar(req)


# ---------------------------------------------------------------------------
# planning

class Planner(Protocol):
    def plan_text(self, instance: EvalInstance) -> str: ...


def planner_prompt() -> str:
    return (resources.files("crosscal.data") / "planner_prompt.txt"
            ).read_text(encoding="utf-8")


def final_response_prompt() -> str:
    return (resources.files("crosscal.data") / "final_response_prompt.txt"
            ).read_text(encoding="utf-8")


@dataclass
class ModelPlanner:
    """Asks a model for a plan; the prompt carries the full tool
    description and few-shot examples.  Unparseable output gets the one
    retry from `propose_plan` before failing hard."""

    client: ModelClient

    def plan_text(self, instance: EvalInstance) -> str:
        _, raw = propose_plan(self.client, instance.question)
        return raw


def propose_plan(client: ModelClient, question: str) -> tuple[AgentPlan, str]:
    """Model call plus parse, with one retry carrying the parse error."""
    raw = client.complete(f"{planner_prompt()}\n\n- Query: {question}\n")
    try:
        return parse_plan(raw), raw
    except PlanParseFailure as first:
        retry = client.complete(
            f"{planner_prompt()}\n\n- Query: {question}\n\n"
            f"Your previous output could not be parsed: {first}. "
            f"Respond with only the JSON plan.\n")
        return parse_plan(retry), retry


@dataclass
class OraclePlanner:
    """Scripted planner that derives the correct plan from each
    instance's answer recipe; exercises the same parse/execute path as
    model output."""

    def plan_text(self, instance: EvalInstance) -> str:
        return json.dumps(_oracle_steps(instance), indent=1)


def _date_obj(date: CalendarDate) -> dict:
    obj = {"calendar": date.calendar.value, "year": date.year,
           "month": date.month, "day": date.day}
    if date.is_leap_month:
        obj["leap_month"] = True
    return obj


def _oracle_steps(instance: EvalInstance) -> list[dict]:
    recipe: AnswerRecipe = instance.recipe
    polar = instance.template.question_format is QuestionFormat.POLAR
    steps: list[dict] = []
    if recipe.offset_days is not None:
        steps.append({"op": "shift_days", "bind": "d1",
                      "date": _date_obj(recipe.reference),
                      "days": recipe.offset_days})
        value_ref = "d1"
        if not polar:
            steps.append({"op": "search_calendar", "bind": "c1",
                          "date": "d1"})
            value_ref = f"c1.{recipe.target.value}"
    else:
        steps.append({"op": "search_calendar", "bind": "c1",
                      "calendar": recipe.source.value,
                      "year": recipe.reference.year + recipe.offset_years,
                      "festival": recipe.festival})
        value_ref = f"c1.{recipe.target.value}"
    if polar:
        steps.append({"op": "compare_date", "bind": "b1", "date": value_ref,
                      "expected": _date_obj(recipe.expected)})
        value_ref = "b1"
    steps.append({"op": "emit", "value": value_ref})
    return steps


@dataclass
class FlakyPlanner:
    """Wraps a planner and corrupts every n-th plan, for exercising the
    failure paths."""

    inner: Planner
    every: int = 10
    _count: int = field(default=0, repr=False)

    def plan_text(self, instance: EvalInstance) -> str:
        self._count += 1
        if self._count % self.every == 0:
            return "I would rather explain my reasoning in prose."
        return self.inner.plan_text(instance)


# ---------------------------------------------------------------------------
# final answer and the per-question pipeline

def finalize_answer(result: CalendarDate | bool,
                    question: str = "",
                    client: ModelClient | None = None) -> str:
    """Render an execution result. The deterministic local formatter is
    the default; pass a client to delegate formatting to a model."""
    if client is not None:
        answer = format_result_numeric(result)
        reply = client.complete(
            f"{final_response_prompt()}\n\n- Query: {question}\n"
            f"- Answer: {answer}\n- Response:")
        return reply.strip()
    if isinstance(result, bool):
        return "Yes" if result else "No"
    return render_date(result, RenderStyle.ANSWER)


def format_result_numeric(result: CalendarDate | bool) -> str:
    if isinstance(result, bool):
        return str(result)
    return f"{result.year}-{result.month}-{result.day}"


def run_agent(planner: Planner, instances: Sequence[EvalInstance],
              formatter_client: ModelClient | None = None
              ) -> list[AgentTranscript]:
    """Run the plan/execute/answer pipeline over an instance set.

    Failures land in the transcript's error field and the run continues;
    a transcript has a final answer exactly when it has no error.
    """
    transcripts = []
    for inst in instances:
        raw = ""
        transcript = AgentTranscript(question=inst.question, raw_plan="",
                                     instance_id=inst.id)
        try:
            raw = planner.plan_text(inst)
            transcript.raw_plan = raw
            transcript.plan = parse_plan(raw)
            transcript.result = execute_plan(transcript.plan)
            transcript.final_answer = finalize_answer(
                transcript.result, inst.question, formatter_client)
        except CrosscalError as exc:
            transcript.raw_plan = raw
            transcript.error = f"{type(exc).__name__}: {exc}"
        transcripts.append(transcript)
    return transcripts


def write_transcripts(transcripts: Iterable[AgentTranscript],
                      destination: str | Path) -> int:
    count = 0
    with open(destination, "w", encoding="utf-8") as fh:
        for t in transcripts:
            fh.write(json.dumps(t.to_record(), ensure_ascii=False) + "\n")
            count += 1
    return count
