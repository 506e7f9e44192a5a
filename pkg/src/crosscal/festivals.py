"""Fixed-rule festival registry: 21 festivals across four calendars.

Every festival is a fixed (month, day) in its home calendar; none falls
in a leap month, and movable feasts defined by weekday rules are out of
scope.  The built-in rules can be overridden by loading a JSON data
file so the registry stays auditable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .calendars import CalendarDate, CalendarId, validate, year_supported
from .errors import InvalidDate, OutOfSupportedRange, UnknownFestival


@dataclass(frozen=True)
class FestivalDef:
    calendar: CalendarId
    name: str
    month: int
    day: int


_G = CalendarId.GREGORIAN
_C = CalendarId.CHINESE_LUNAR
_I = CalendarId.ISLAMIC
_P = CalendarId.PERSIAN

DEFAULT_FESTIVALS = (
    FestivalDef(_G, "New Year's Day", 1, 1),
    FestivalDef(_G, "Valentine's Day", 2, 14),
    FestivalDef(_G, "International Women's Day", 3, 8),
    FestivalDef(_G, "International Workers' Day", 5, 1),
    FestivalDef(_G, "International Children's Day", 6, 1),
    FestivalDef(_G, "Halloween", 10, 31),
    FestivalDef(_G, "Christmas Day", 12, 25),
    FestivalDef(_C, "Chinese New Year", 1, 1),
    FestivalDef(_C, "Lantern Festival", 1, 15),
    FestivalDef(_C, "Dragon Boat Festival", 5, 5),
    FestivalDef(_C, "Chinese Valentine's Day", 7, 7),
    FestivalDef(_C, "Ghost Festival", 7, 15),
    FestivalDef(_C, "Mid-Autumn Festival", 8, 15),
    FestivalDef(_I, "Hijri New Year", 1, 1),
    FestivalDef(_I, "Isra and Mi'raj", 7, 27),
    FestivalDef(_I, "Eid al-Fitr", 10, 1),
    FestivalDef(_I, "Eid al-Adha", 12, 10),
    FestivalDef(_P, "Persian New Year", 1, 1),
    FestivalDef(_P, "Sizdah Be-dar", 1, 13),
    # Mehregan is observed on Mehr 10 in some traditions; Mehr 16 is the
    # fixed rule here, overridable via a data file.
    FestivalDef(_P, "Mehregan Festival", 7, 16),
    FestivalDef(_P, "Tirgan Festival", 4, 13),
)


class FestivalRegistry:
    """Immutable after construction; concurrent reads are safe."""

    def __init__(self, definitions: tuple[FestivalDef, ...] = DEFAULT_FESTIVALS):
        self._by_calendar: dict[CalendarId, dict[str, FestivalDef]] = {
            cal: {} for cal in CalendarId
        }
        for d in definitions:
            self._by_calendar[d.calendar][d.name] = d
        self._definitions = tuple(definitions)

    @classmethod
    def from_file(cls, path: str | Path) -> "FestivalRegistry":
        """Load definitions from a JSON list of records with keys
        calendar, name, month, day."""
        records = json.loads(Path(path).read_text(encoding="utf-8"))
        defs = tuple(
            FestivalDef(CalendarId.parse(r["calendar"]), r["name"],
                        int(r["month"]), int(r["day"]))
            for r in records
        )
        return cls(defs)

    def to_file(self, path: str | Path) -> None:
        records = [
            {"calendar": d.calendar.value, "name": d.name,
             "month": d.month, "day": d.day}
            for d in self._definitions
        ]
        Path(path).write_text(json.dumps(records, indent=2) + "\n",
                              encoding="utf-8")

    def __len__(self) -> int:
        return len(self._definitions)

    def list_festivals(self, calendar: CalendarId) -> list[str]:
        """Festival names registered under `calendar`, in registry order."""
        return list(self._by_calendar[calendar])

    def festival_date(self, calendar: CalendarId, year: int,
                      name: str) -> CalendarDate:
        """The festival's date in its home calendar for that year."""
        try:
            d = self._by_calendar[calendar][name]
        except KeyError:
            raise UnknownFestival(
                f"{name!r} is not a {calendar.display_name} festival") from None
        if not year_supported(calendar, year):
            raise OutOfSupportedRange(
                f"{calendar.display_name} year {year} outside supported range")
        date = CalendarDate(calendar, year, d.month, d.day)
        if not validate(date):
            raise InvalidDate(f"festival rule produced invalid date: {date}")
        return date


_default = FestivalRegistry()


def default_registry() -> FestivalRegistry:
    return _default


def festival_date(calendar: CalendarId, year: int, name: str) -> CalendarDate:
    return _default.festival_date(calendar, year, name)


def list_festivals(calendar: CalendarId) -> list[str]:
    return _default.list_festivals(calendar)
