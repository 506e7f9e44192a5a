"""Unified date-or-festival lookup returning six-way equivalent dates.

A request names one calendar and either a full (year, month, day) date
or a (year, festival) pair; the result maps every supported calendar to
the canonical string of the same day.  Festival requests resolve in the
festival's home calendar, so the entry under the source calendar is the
festival's own home-calendar date.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calendars import (
    CALENDAR_ORDER,
    CalendarDate,
    CalendarId,
    convert,
    format_date,
    parse_date,
    to_fixed,
    validate,
)
from .errors import BadRequest, InvalidDate
from .festivals import FestivalRegistry, default_registry


@dataclass(frozen=True)
class SearchRequest:
    """Either (month and day) or festival_name must be given, never both."""

    calendar_name: CalendarId
    year: int
    month: int | None = None
    day: int | None = None
    festival_name: str | None = None
    is_lunar_leap_month: bool = False


@dataclass(frozen=True)
class CrossCalendarEntry:
    """Six canonical date strings denoting the same fixed day."""

    dates: dict[CalendarId, str] = field(default_factory=dict)

    def __getitem__(self, calendar: CalendarId) -> str:
        return self.dates[calendar]

    def date(self, calendar: CalendarId) -> CalendarDate:
        return parse_date(calendar, self.dates[calendar])

    def as_dict(self) -> dict[str, str]:
        """Serialized form keyed by display name, in fixed order."""
        return {cal.display_name: self.dates[cal] for cal in CALENDAR_ORDER}


def _resolve_request(req: SearchRequest,
                     registry: FestivalRegistry) -> CalendarDate:
    has_date = req.month is not None and req.day is not None
    has_festival = req.festival_name is not None
    if has_date == has_festival:
        raise BadRequest(
            "provide either a full date (year, month, day) or a festival name")
    if req.month is not None or req.day is not None:
        if not has_date:
            raise BadRequest("month and day must be given together")
    if has_festival:
        return registry.festival_date(req.calendar_name, req.year,
                                      req.festival_name)
    leap = (req.is_lunar_leap_month
            if req.calendar_name is CalendarId.CHINESE_LUNAR else False)
    date = CalendarDate(req.calendar_name, req.year, req.month, req.day, leap)
    if not validate(date):
        raise InvalidDate(f"invalid date: {date}")
    return date


def entry_for(date: CalendarDate) -> CrossCalendarEntry:
    """Six-way entry of an already-validated date."""
    return CrossCalendarEntry({
        cal: format_date(convert(date, cal)) for cal in CALENDAR_ORDER
    })


def search_calendar(req: SearchRequest,
                    registry: FestivalRegistry | None = None) -> CrossCalendarEntry:
    """Map a date or festival to its equivalents in all six calendars."""
    date = _resolve_request(req, registry or default_registry())
    to_fixed(date)  # surfaces OutOfSupportedRange before building the entry
    return entry_for(date)
