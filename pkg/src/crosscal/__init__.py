"""Cross-calendar date conversion and a dynamic temporal-reasoning
benchmark over six calendar systems."""

from .calendars import (
    CALENDAR_ORDER,
    CalendarDate,
    CalendarId,
    FixedDay,
    add_days,
    convert,
    format_date,
    from_fixed,
    month_name,
    parse_date,
    to_fixed,
    validate,
    year_length,
)
from .facade import CrossCalendarEntry, SearchRequest, search_calendar
from .festivals import FestivalRegistry, festival_date, list_festivals
from .generator import (
    GenerationConfig,
    PolarMode,
    default_evaluation_dates,
    generate,
    read_instances,
    write_instances,
)
from .templates import (
    AnswerRecipe,
    EvalInstance,
    QuestionTemplate,
    RenderStyle,
    brute_force_oracle,
    evaluate_recipe,
    instantiate,
    render_date,
)

__version__ = "0.1.0"

__all__ = [
    "CALENDAR_ORDER",
    "AnswerRecipe",
    "CalendarDate",
    "CalendarId",
    "CrossCalendarEntry",
    "EvalInstance",
    "FestivalRegistry",
    "FixedDay",
    "GenerationConfig",
    "PolarMode",
    "QuestionTemplate",
    "RenderStyle",
    "SearchRequest",
    "add_days",
    "brute_force_oracle",
    "convert",
    "default_evaluation_dates",
    "evaluate_recipe",
    "festival_date",
    "format_date",
    "from_fixed",
    "generate",
    "instantiate",
    "list_festivals",
    "month_name",
    "parse_date",
    "read_instances",
    "render_date",
    "search_calendar",
    "to_fixed",
    "validate",
    "write_instances",
    "year_length",
]
