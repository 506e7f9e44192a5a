"""Question templates paired with structured answer recipes.

Twelve templates cover two reasoning types (date-based offsets in days
or weeks, festival-based offsets in years), two question formats
(content questions answered with a date, polar questions answered
Yes/No), and two tenses.  A recipe captures the full computation that
produces the gold answer: reference date, optional festival, signed
offset, and the source/target calendar pair, of which exactly one side
is always Gregorian.

Date-based evaluation shifts the reference in the Gregorian frame and
converts the result; day offsets are frame-independent, so the brute
force oracle below can instead step the reference one day at a time in
its own calendar and convert only at the end, giving an independent
check of the same contract.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .calendars import (
    CalendarDate,
    CalendarId,
    add_days,
    convert,
    first_day_of_year,
    month_name,
)
from .errors import BadRequest, MissingVariable
from .festivals import FestivalRegistry, default_registry


class ReasoningType(enum.Enum):
    DATE_BASED = "date_based"
    FESTIVAL_BASED = "festival_based"


class QuestionFormat(enum.Enum):
    CONTENT = "content"
    POLAR = "polar"


class OffsetUnit(enum.Enum):
    DAYS = "days"
    WEEKS = "weeks"
    YEARS = "years"


class Tense(enum.Enum):
    PAST = "past"
    FUTURE = "future"


class Direction(enum.Enum):
    GREGORIAN_TO_OTHERS = "gregorian_to_others"
    OTHERS_TO_GREGORIAN = "others_to_gregorian"


class RenderStyle(enum.Enum):
    QUESTION = "question"
    ANSWER = "answer"


@dataclass(frozen=True)
class QuestionTemplate:
    id: str
    reasoning_type: ReasoningType
    question_format: QuestionFormat
    offset_unit: OffsetUnit
    tense: Tense
    text_pattern: str


_PREFIX = 'Today\'s date on the {source_calendar} calendar is "{reference_date}". '

TEMPLATES: tuple[QuestionTemplate, ...] = (
    QuestionTemplate(
        "date_content_days_past", ReasoningType.DATE_BASED,
        QuestionFormat.CONTENT, OffsetUnit.DAYS, Tense.PAST,
        _PREFIX + "What was the {target_calendar} calendar date {offset} days ago?"),
    QuestionTemplate(
        "date_content_days_future", ReasoningType.DATE_BASED,
        QuestionFormat.CONTENT, OffsetUnit.DAYS, Tense.FUTURE,
        _PREFIX + "What is the {target_calendar} calendar date {offset} days later?"),
    QuestionTemplate(
        "date_content_weeks_past", ReasoningType.DATE_BASED,
        QuestionFormat.CONTENT, OffsetUnit.WEEKS, Tense.PAST,
        _PREFIX + "What was the {target_calendar} calendar date {offset} weeks ago?"),
    QuestionTemplate(
        "date_content_weeks_future", ReasoningType.DATE_BASED,
        QuestionFormat.CONTENT, OffsetUnit.WEEKS, Tense.FUTURE,
        _PREFIX + "What is the {target_calendar} calendar date {offset} weeks later?"),
    QuestionTemplate(
        "date_polar_days_past", ReasoningType.DATE_BASED,
        QuestionFormat.POLAR, OffsetUnit.DAYS, Tense.PAST,
        _PREFIX + "Was the {target_calendar} calendar date {offset} days ago "
                  'equivalent to the date "{expected_date}"?'),
    QuestionTemplate(
        "date_polar_days_future", ReasoningType.DATE_BASED,
        QuestionFormat.POLAR, OffsetUnit.DAYS, Tense.FUTURE,
        _PREFIX + "Is the {target_calendar} calendar date {offset} days later "
                  'equivalent to the date "{expected_date}"?'),
    QuestionTemplate(
        "date_polar_weeks_past", ReasoningType.DATE_BASED,
        QuestionFormat.POLAR, OffsetUnit.WEEKS, Tense.PAST,
        _PREFIX + "Was the {target_calendar} calendar date {offset} weeks ago "
                  'equivalent to the date "{expected_date}"?'),
    QuestionTemplate(
        "date_polar_weeks_future", ReasoningType.DATE_BASED,
        QuestionFormat.POLAR, OffsetUnit.WEEKS, Tense.FUTURE,
        _PREFIX + "Is the {target_calendar} calendar date {offset} weeks later "
                  'equivalent to the date "{expected_date}"?'),
    QuestionTemplate(
        "fest_content_years_past", ReasoningType.FESTIVAL_BASED,
        QuestionFormat.CONTENT, OffsetUnit.YEARS, Tense.PAST,
        _PREFIX + "What was the {target_calendar} calendar date of the "
                  '{source_calendar} festival "{festival}" {offset} years ago?'),
    QuestionTemplate(
        "fest_content_years_future", ReasoningType.FESTIVAL_BASED,
        QuestionFormat.CONTENT, OffsetUnit.YEARS, Tense.FUTURE,
        _PREFIX + "What is the {target_calendar} calendar date of the "
                  '{source_calendar} festival "{festival}" {offset} years later?'),
    QuestionTemplate(
        "fest_polar_years_past", ReasoningType.FESTIVAL_BASED,
        QuestionFormat.POLAR, OffsetUnit.YEARS, Tense.PAST,
        _PREFIX + "Was the {target_calendar} calendar date of the "
                  '{source_calendar} festival "{festival}" {offset} years ago '
                  'equivalent to the date "{expected_date}"?'),
    QuestionTemplate(
        "fest_polar_years_future", ReasoningType.FESTIVAL_BASED,
        QuestionFormat.POLAR, OffsetUnit.YEARS, Tense.FUTURE,
        _PREFIX + "Is the {target_calendar} calendar date of the "
                  '{source_calendar} festival "{festival}" {offset} years later '
                  'equivalent to the date "{expected_date}"?'),
)

TEMPLATE_INDEX = {t.id: i for i, t in enumerate(TEMPLATES)}


def template_by_id(template_id: str) -> QuestionTemplate:
    return TEMPLATES[TEMPLATE_INDEX[template_id]]


def templates_to_file(path, templates: tuple[QuestionTemplate, ...] = TEMPLATES
                      ) -> None:
    """Write the template set as an auditable JSON list."""
    records = [
        {"id": t.id, "reasoning_type": t.reasoning_type.value,
         "question_format": t.question_format.value,
         "offset_unit": t.offset_unit.value, "tense": t.tense.value,
         "text_pattern": t.text_pattern}
        for t in templates
    ]
    Path(path).write_text(json.dumps(records, indent=2) + "\n",
                          encoding="utf-8")


def templates_from_file(path) -> tuple[QuestionTemplate, ...]:
    records = json.loads(Path(path).read_text(encoding="utf-8"))
    return tuple(
        QuestionTemplate(
            id=r["id"],
            reasoning_type=ReasoningType(r["reasoning_type"]),
            question_format=QuestionFormat(r["question_format"]),
            offset_unit=OffsetUnit(r["offset_unit"]),
            tense=Tense(r["tense"]),
            text_pattern=r["text_pattern"],
        )
        for r in records
    )


@dataclass(frozen=True)
class AnswerRecipe:
    """Structured computation producing one instance's gold answer.

    Offsets are signed (negative = past).  `expected` is set only for
    polar questions and lives in the target calendar.
    """

    source: CalendarId
    target: CalendarId
    reference: CalendarDate
    festival: str | None = None
    offset_days: int | None = None
    offset_years: int | None = None
    expected: CalendarDate | None = None

    @property
    def direction(self) -> Direction:
        if self.source is CalendarId.GREGORIAN:
            return Direction.GREGORIAN_TO_OTHERS
        return Direction.OTHERS_TO_GREGORIAN

    @property
    def reasoning_type(self) -> ReasoningType:
        if self.offset_years is not None:
            return ReasoningType.FESTIVAL_BASED
        return ReasoningType.DATE_BASED

    def check(self) -> None:
        gregorian_ends = (self.source is CalendarId.GREGORIAN,
                          self.target is CalendarId.GREGORIAN)
        if sum(gregorian_ends) != 1:
            raise BadRequest("exactly one endpoint must be Gregorian")
        if (self.offset_days is None) == (self.offset_years is None):
            raise BadRequest("exactly one of offset_days/offset_years required")
        if (self.festival is None) != (self.offset_years is None):
            raise BadRequest("festival goes with a year offset and only then")
        if self.reference.calendar is not self.source:
            raise BadRequest("reference date must be in the source calendar")
        if self.expected is not None and self.expected.calendar is not self.target:
            raise BadRequest("expected date must be in the target calendar")


def dates_equal(a: CalendarDate, b: CalendarDate) -> bool:
    return (a.calendar is b.calendar and a.year == b.year and a.month == b.month
            and a.day == b.day and a.is_leap_month == b.is_leap_month)


def _resolve_content(recipe: AnswerRecipe,
                     registry: FestivalRegistry) -> CalendarDate:
    if recipe.offset_days is not None:
        in_gregorian = convert(recipe.reference, CalendarId.GREGORIAN)
        shifted = add_days(in_gregorian, recipe.offset_days)
        return convert(shifted, recipe.target)
    year = recipe.reference.year + recipe.offset_years
    home = registry.festival_date(recipe.source, year, recipe.festival)
    return convert(home, recipe.target)


def evaluate_recipe(recipe: AnswerRecipe,
                    registry: FestivalRegistry | None = None
                    ) -> CalendarDate | bool:
    """Gold computation: the target-calendar date for content recipes,
    or the equality verdict against `expected` for polar ones."""
    recipe.check()
    registry = registry or default_registry()
    result = _resolve_content(recipe, registry)
    if recipe.expected is None:
        return result
    return dates_equal(result, recipe.expected)


def brute_force_oracle(recipe: AnswerRecipe,
                       registry: FestivalRegistry | None = None
                       ) -> CalendarDate | bool:
    """Same contract as `evaluate_recipe`, computed by single-day steps
    with the conversion deferred to the very end.  Test-only path."""
    recipe.check()
    registry = registry or default_registry()
    if recipe.offset_days is not None:
        date = recipe.reference
        step = 1 if recipe.offset_days >= 0 else -1
        for _ in range(abs(recipe.offset_days)):
            date = add_days(date, step)
        result = convert(date, recipe.target)
    else:
        year = recipe.reference.year + recipe.offset_years
        rule = registry.festival_date(recipe.source, year, recipe.festival)
        date = first_day_of_year(recipe.source, year)
        while not (date.month == rule.month and date.day == rule.day
                   and not date.is_leap_month):
            date = add_days(date, 1)
            if date.year != year:
                raise AssertionError(f"festival scan left year {year}")
        result = convert(date, recipe.target)
    if recipe.expected is None:
        return result
    return dates_equal(result, recipe.expected)


def render_date(date: CalendarDate, style: RenderStyle) -> str:
    """Deterministic textual rendering with month names.

    Gregorian reads "June 30, 2060" in both styles; the other mapped
    calendars read "22 Muharram 1483" in questions and "22 Muharram,
    1483" in answers; Chinese lunar dates use numbered months.
    """
    cal = date.calendar
    if cal is CalendarId.GREGORIAN:
        return f"{month_name(cal, date.month)} {date.day}, {date.year}"
    if cal is CalendarId.CHINESE_LUNAR:
        text = f"Month {date.month} Day {date.day}, {date.year}"
        return text + (" (leap)" if date.is_leap_month else "")
    name = month_name(cal, date.month, date.is_leap_month)
    if style is RenderStyle.QUESTION:
        return f"{date.day} {name} {date.year}"
    return f"{date.day} {name}, {date.year}"


def instantiate(template: QuestionTemplate, recipe: AnswerRecipe) -> str:
    """Fill the template's placeholders from the recipe; every date is
    rendered with textual month names."""
    recipe.check()
    if template.reasoning_type is not recipe.reasoning_type:
        raise MissingVariable(
            f"recipe offsets do not match template {template.id}")
    offset = abs(recipe.offset_days if recipe.offset_days is not None
                 else recipe.offset_years)
    if template.offset_unit is OffsetUnit.WEEKS:
        if offset % 7:
            raise MissingVariable("weeks template needs a multiple of 7 days")
        offset //= 7
    values = {
        "source_calendar": recipe.source.display_name,
        "target_calendar": recipe.target.display_name,
        "reference_date": render_date(recipe.reference, RenderStyle.QUESTION),
        "offset": offset,
    }
    if "{festival}" in template.text_pattern:
        if recipe.festival is None:
            raise MissingVariable("template requires a festival")
        values["festival"] = recipe.festival
    if "{expected_date}" in template.text_pattern:
        if recipe.expected is None:
            raise MissingVariable("polar template requires an expected date")
        values["expected_date"] = render_date(recipe.expected,
                                              RenderStyle.QUESTION)
    return template.text_pattern.format(**values)


@dataclass(frozen=True)
class EvalInstance:
    """One generated benchmark item."""

    id: str
    evaluation_date: CalendarDate
    template_id: str
    recipe: AnswerRecipe
    question: str
    gold_answer: str

    @property
    def template(self) -> QuestionTemplate:
        return template_by_id(self.template_id)


def gold_answer_for(recipe: AnswerRecipe,
                    registry: FestivalRegistry | None = None) -> str:
    result = evaluate_recipe(recipe, registry)
    if isinstance(result, bool):
        return "Yes" if result else "No"
    return render_date(result, RenderStyle.ANSWER)
