"""Deterministic four-stage instance generation from one Gregorian date.

Stage 1 converts the evaluation date into its five non-Gregorian
equivalents; stage 2 forms source/target pairs with exactly one
Gregorian endpoint (festival pairs exist only where the source calendar
has festivals); stage 3 instantiates every template x direction x
offset combination; stage 4 evaluates each recipe into its gold answer.

Under the default offset ranges (days and weeks 1-10, years 1-5) one
instance is generated per offset value, which yields 800 date-based
plus 980 festival-based = 1,780 instances per evaluation date.
"""

from __future__ import annotations

import enum
import hashlib
import json
import random
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

from .calendars import (
    NON_GREGORIAN,
    CalendarDate,
    CalendarId,
    add_days,
    format_date,
    parse_date,
    validate,
    year_supported,
)
from .errors import InvalidDate, OutOfSupportedRange
from .facade import SearchRequest, search_calendar
from .festivals import FestivalRegistry, default_registry
from .templates import (
    TEMPLATE_INDEX,
    TEMPLATES,
    AnswerRecipe,
    Direction,
    EvalInstance,
    OffsetUnit,
    QuestionFormat,
    ReasoningType,
    Tense,
    evaluate_recipe,
    gold_answer_for,
    instantiate,
)


class PolarMode(enum.Enum):
    ALL_YES = "all_yes"
    PERTURBED = "perturbed"


@dataclass(frozen=True)
class GenerationConfig:
    evaluation_date: CalendarDate
    day_offsets: tuple[int, ...] = tuple(range(1, 11))
    week_offsets: tuple[int, ...] = tuple(range(1, 11))
    year_offsets: tuple[int, ...] = tuple(range(1, 6))
    polar_mode: PolarMode = PolarMode.ALL_YES
    seed: int = 0


def default_evaluation_dates() -> list[CalendarDate]:
    """July 1st of every fifth year from 1960 through 2060 (21 dates)."""
    return [CalendarDate(CalendarId.GREGORIAN, year, 7, 1)
            for year in range(1960, 2061, 5)]


def _instance_id(evaluation_date: CalendarDate, template_id: str,
                 recipe: AnswerRecipe) -> str:
    payload = "|".join([
        format_date(evaluation_date),
        template_id,
        recipe.source.value,
        recipe.target.value,
        format_date(recipe.reference),
        recipe.festival or "",
        str(recipe.offset_days),
        str(recipe.offset_years),
        format_date(recipe.expected) if recipe.expected else "",
    ])
    return hashlib.sha1(payload.encode("utf-8")).hexdigest()[:16]


def _sort_key(inst: EvalInstance) -> tuple:
    r = inst.recipe
    other = r.target if r.direction is Direction.GREGORIAN_TO_OTHERS else r.source
    offset = abs(r.offset_days if r.offset_days is not None else r.offset_years)
    return (
        r.reasoning_type.value,
        r.direction.value,
        NON_GREGORIAN.index(other),
        TEMPLATE_INDEX[inst.template_id],
        offset,
        r.festival or "",
    )


def generate(config: GenerationConfig,
             registry: FestivalRegistry | None = None) -> list[EvalInstance]:
    """Full deterministic instance set for one evaluation date."""
    registry = registry or default_registry()
    base = config.evaluation_date
    if base.calendar is not CalendarId.GREGORIAN:
        raise InvalidDate("the evaluation date must be Gregorian")
    if not validate(base):
        raise InvalidDate(f"invalid evaluation date: {base}")

    entry = search_calendar(
        SearchRequest(CalendarId.GREGORIAN, base.year, base.month, base.day),
        registry)
    references = {cal: entry.date(cal) for cal in (CalendarId.GREGORIAN,
                                                   *NON_GREGORIAN)}
    _check_offset_headroom(config, references, registry)

    rng = random.Random(config.seed)
    instances: list[EvalInstance] = []
    for other in NON_GREGORIAN:
        for source, target in ((CalendarId.GREGORIAN, other),
                               (other, CalendarId.GREGORIAN)):
            instances.extend(_date_based(config, references[source],
                                         source, target, registry, rng))
    for source, target, festival in _festival_pairs(registry):
        instances.extend(_festival_based(config, references[source],
                                         source, target, festival,
                                         registry, rng))
    instances.sort(key=_sort_key)
    return instances


def _check_offset_headroom(config: GenerationConfig,
                           references: dict[CalendarId, CalendarDate],
                           registry: FestivalRegistry) -> None:
    worst = max((max(config.day_offsets, default=0),
                 7 * max(config.week_offsets, default=0)))
    for delta in (worst, -worst):
        add_days(config.evaluation_date, delta)  # raises near the range edges
    years = max(config.year_offsets, default=0)
    for cal, ref in references.items():
        if not registry.list_festivals(cal):
            continue
        for y in (ref.year - years, ref.year + years):
            if not year_supported(cal, y):
                raise OutOfSupportedRange(
                    f"{cal.display_name} year {y} outside supported range")


def _festival_pairs(registry: FestivalRegistry
                    ) -> Iterable[tuple[CalendarId, CalendarId, str]]:
    for festival in registry.list_festivals(CalendarId.GREGORIAN):
        for target in NON_GREGORIAN:
            yield CalendarId.GREGORIAN, target, festival
    for source in NON_GREGORIAN:
        for festival in registry.list_festivals(source):
            yield source, CalendarId.GREGORIAN, festival


def _signed(offset: int, tense: Tense) -> int:
    return -offset if tense is Tense.PAST else offset


def _perturb(result: CalendarDate, rng: random.Random) -> CalendarDate:
    delta = rng.choice([-3, -2, -1, 1, 2, 3])
    return add_days(result, delta)


def _build_instance(config: GenerationConfig, template, recipe: AnswerRecipe,
                    registry: FestivalRegistry,
                    rng: random.Random) -> EvalInstance:
    if template.question_format is QuestionFormat.POLAR:
        result = evaluate_recipe(recipe, registry)
        expected = (result if config.polar_mode is PolarMode.ALL_YES
                    else _perturb(result, rng))
        recipe = replace(recipe, expected=expected)
    question = instantiate(template, recipe)
    gold = gold_answer_for(recipe, registry)
    return EvalInstance(
        id=_instance_id(config.evaluation_date, template.id, recipe),
        evaluation_date=config.evaluation_date,
        template_id=template.id,
        recipe=recipe,
        question=question,
        gold_answer=gold,
    )


def _date_based(config, reference, source, target, registry, rng):
    for template in TEMPLATES:
        if template.reasoning_type is not ReasoningType.DATE_BASED:
            continue
        offsets = (config.day_offsets if template.offset_unit is OffsetUnit.DAYS
                   else config.week_offsets)
        unit = 1 if template.offset_unit is OffsetUnit.DAYS else 7
        for n in offsets:
            recipe = AnswerRecipe(
                source=source, target=target, reference=reference,
                offset_days=_signed(n * unit, template.tense))
            yield _build_instance(config, template, recipe, registry, rng)


def _festival_based(config, reference, source, target, festival, registry, rng):
    for template in TEMPLATES:
        if template.reasoning_type is not ReasoningType.FESTIVAL_BASED:
            continue
        for n in config.year_offsets:
            recipe = AnswerRecipe(
                source=source, target=target, reference=reference,
                festival=festival,
                offset_years=_signed(n, template.tense))
            yield _build_instance(config, template, recipe, registry, rng)


# ---------------------------------------------------------------------------
# line-delimited serialization (the canonical instance file schema)

def instance_to_record(inst: EvalInstance) -> dict:
    r = inst.recipe
    template = inst.template
    unit = template.offset_unit
    offset = abs(r.offset_days if r.offset_days is not None else r.offset_years)
    if unit is OffsetUnit.WEEKS:
        offset //= 7
    return {
        "id": inst.id,
        "evaluation_date": format_date(inst.evaluation_date),
        "reasoning_type": r.reasoning_type.value,
        "question_format": template.question_format.value,
        "direction_source": r.source.value,
        "direction_target": r.target.value,
        "template_id": inst.template_id,
        "offsets": {"unit": unit.value, "value": offset},
        "festival": r.festival,
        "question": inst.question,
        "gold_answer": inst.gold_answer,
        "recipe": {
            "direction": r.direction.value,
            "source": r.source.value,
            "target": r.target.value,
            "reference": format_date(r.reference),
            "festival": r.festival,
            "offset_days": r.offset_days,
            "offset_years": r.offset_years,
            "expected": format_date(r.expected) if r.expected else None,
        },
    }


def instance_from_record(record: dict) -> EvalInstance:
    rec = record["recipe"]
    source = CalendarId(rec["source"])
    target = CalendarId(rec["target"])
    recipe = AnswerRecipe(
        source=source,
        target=target,
        reference=parse_date(source, rec["reference"]),
        festival=rec["festival"],
        offset_days=rec["offset_days"],
        offset_years=rec["offset_years"],
        expected=(parse_date(target, rec["expected"])
                  if rec["expected"] else None),
    )
    return EvalInstance(
        id=record["id"],
        evaluation_date=parse_date(CalendarId.GREGORIAN,
                                   record["evaluation_date"]),
        template_id=record["template_id"],
        recipe=recipe,
        question=record["question"],
        gold_answer=record["gold_answer"],
    )


def write_instances(instances: Iterable[EvalInstance],
                    destination: str | Path) -> int:
    """One JSON record per line; returns the number written."""
    count = 0
    with open(destination, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(instance_to_record(inst), ensure_ascii=False))
            fh.write("\n")
            count += 1
    return count


def read_instances(path: str | Path) -> list[EvalInstance]:
    instances = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                instances.append(instance_from_record(json.loads(line)))
    return instances
