"""Date arithmetic and bidirectional conversion for six calendar systems
over a shared fixed-day count.

Fixed day 1 is the first day of proleptic Gregorian year 1; every
calendar converts to and from that scale, which makes all pairwise
conversions compositions of two steps.  Supported range: Gregorian
years 1800-2199 for every calendar except the table-driven Chinese
lunar calendar (lunar years 1899-2100).

All functions are pure and all values immutable, so the module is safe
for unrestricted concurrent use.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..errors import InvalidDate, InvalidMonth, OutOfSupportedRange
from . import chinese, gregorian, hebrew, islamic, persian, shaka

FixedDay = int

# conversions for the non-table calendars are defined on this window
FIXED_MIN = 657072  # 1800-01-01
FIXED_MAX = 803168  # 2199-12-31


class CalendarId(enum.Enum):
    """The six supported calendar systems."""

    GREGORIAN = "gregorian"
    CHINESE_LUNAR = "chinese_lunar"
    ISLAMIC = "islamic"
    HEBREW = "hebrew"
    SHAKA = "shaka"
    PERSIAN = "persian"

    @property
    def display_name(self) -> str:
        return _DISPLAY_NAMES[self]

    @classmethod
    def parse(cls, name: str) -> "CalendarId":
        key = name.strip().lower().replace("-", " ").replace("_", " ")
        try:
            return _ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown calendar name: {name!r}") from None


_DISPLAY_NAMES = {
    CalendarId.GREGORIAN: "Gregorian",
    CalendarId.CHINESE_LUNAR: "Chinese Lunar",
    CalendarId.ISLAMIC: "Islamic",
    CalendarId.HEBREW: "Hebrew",
    CalendarId.SHAKA: "Shaka",
    CalendarId.PERSIAN: "Persian",
}

_ALIASES = {
    "gregorian": CalendarId.GREGORIAN,
    "chinese lunar": CalendarId.CHINESE_LUNAR,
    "lunar": CalendarId.CHINESE_LUNAR,
    "chinese": CalendarId.CHINESE_LUNAR,
    "islamic": CalendarId.ISLAMIC,
    "hijri": CalendarId.ISLAMIC,
    "hebrew": CalendarId.HEBREW,
    "shaka": CalendarId.SHAKA,
    "saka": CalendarId.SHAKA,
    "persian": CalendarId.PERSIAN,
    "jalali": CalendarId.PERSIAN,
}

# order used for serialized six-way entries and deterministic iteration
CALENDAR_ORDER = (
    CalendarId.GREGORIAN,
    CalendarId.CHINESE_LUNAR,
    CalendarId.ISLAMIC,
    CalendarId.HEBREW,
    CalendarId.SHAKA,
    CalendarId.PERSIAN,
)

NON_GREGORIAN = CALENDAR_ORDER[1:]

_MODULES = {
    CalendarId.GREGORIAN: gregorian,
    CalendarId.ISLAMIC: islamic,
    CalendarId.HEBREW: hebrew,
    CalendarId.SHAKA: shaka,
    CalendarId.PERSIAN: persian,
}


@dataclass(frozen=True, order=False)
class CalendarDate:
    """A (calendar, year, month, day) point in one calendar system.

    `is_leap_month` is meaningful only for the Chinese lunar calendar
    and must be False everywhere else.
    """

    calendar: CalendarId
    year: int
    month: int
    day: int
    is_leap_month: bool = False

    def __str__(self) -> str:
        return f"{self.calendar.display_name} {format_date(self)}"


_DATE_RE = re.compile(r"^(\d{1,4})-(\d{1,2})(L?)-(\d{1,2})$")


def format_date(date: CalendarDate) -> str:
    """Canonical zero-padded string, e.g. "2024-06-01" or "2023-02L-15"."""
    leap = "L" if date.is_leap_month else ""
    return f"{date.year:04d}-{date.month:02d}{leap}-{date.day:02d}"


def parse_date(calendar: CalendarId, text: str) -> CalendarDate:
    """Parse a canonical date string; unpadded fields are accepted."""
    m = _DATE_RE.match(text.strip())
    if not m:
        raise InvalidDate(f"not a canonical date string: {text!r}")
    year, month, leap, day = m.groups()
    return CalendarDate(calendar, int(year), int(month), int(day), leap == "L")


def months_in_year(calendar: CalendarId, year: int) -> int:
    if calendar is CalendarId.CHINESE_LUNAR:
        return chinese.months_in_year(year)
    if calendar is CalendarId.HEBREW:
        return hebrew.months_in_year(year)
    return 12


def month_length(calendar: CalendarId, year: int, month: int,
                 is_leap_month: bool = False) -> int:
    if calendar is CalendarId.CHINESE_LUNAR:
        return chinese.month_length(year, month, is_leap_month)
    return _MODULES[calendar].month_length(year, month)


def year_supported(calendar: CalendarId, year: int) -> bool:
    if calendar is CalendarId.CHINESE_LUNAR:
        return chinese.YEAR_MIN <= year <= chinese.YEAR_MAX
    mod = _MODULES[calendar]
    return mod.YEAR_MIN <= year <= mod.YEAR_MAX


def validate(date: CalendarDate) -> bool:
    """True iff the date's fields are within its calendar's rules.

    Total function: never raises, out-of-range years are simply invalid.
    """
    if not year_supported(date.calendar, date.year):
        return False
    if date.calendar is CalendarId.CHINESE_LUNAR:
        if not chinese.valid_month(date.year, date.month, date.is_leap_month):
            return False
        return 1 <= date.day <= chinese.month_length(
            date.year, date.month, date.is_leap_month)
    if date.is_leap_month:
        return False
    if not 1 <= date.month <= months_in_year(date.calendar, date.year):
        return False
    return 1 <= date.day <= month_length(date.calendar, date.year, date.month)


def to_fixed(date: CalendarDate) -> FixedDay:
    """Fixed day of a valid date; inverse of `from_fixed`."""
    if not validate(date):
        raise InvalidDate(f"invalid date: {date}")
    if date.calendar is CalendarId.CHINESE_LUNAR:
        return chinese.to_fixed(date.year, date.month, date.day,
                                date.is_leap_month)
    return _MODULES[date.calendar].to_fixed(date.year, date.month, date.day)


def _fixed_window(calendar: CalendarId) -> tuple[int, int]:
    if calendar is CalendarId.CHINESE_LUNAR:
        return chinese.FIXED_MIN, chinese.FIXED_MAX
    return FIXED_MIN, FIXED_MAX


def from_fixed(fd: FixedDay, calendar: CalendarId) -> CalendarDate:
    lo, hi = _fixed_window(calendar)
    if not lo <= fd <= hi:
        raise OutOfSupportedRange(
            f"fixed day {fd} outside supported range of {calendar.display_name}")
    if calendar is CalendarId.CHINESE_LUNAR:
        year, month, day, leap = chinese.from_fixed(fd)
        return CalendarDate(calendar, year, month, day, leap)
    year, month, day = _MODULES[calendar].from_fixed(fd)
    return CalendarDate(calendar, year, month, day)


def convert(date: CalendarDate, target: CalendarId) -> CalendarDate:
    """Same day expressed in `target`; identity when already there."""
    if date.calendar is target:
        if not validate(date):
            raise InvalidDate(f"invalid date: {date}")
        return date
    return from_fixed(to_fixed(date), target)


def add_days(date: CalendarDate, n: int) -> CalendarDate:
    """Date `n` days later (earlier when negative) in the same calendar."""
    return from_fixed(to_fixed(date) + n, date.calendar)


def year_length(calendar: CalendarId, year: int) -> int:
    """Days in the given calendar year."""
    if not year_supported(calendar, year):
        raise OutOfSupportedRange(
            f"{calendar.display_name} year {year} outside supported range")
    if calendar is CalendarId.CHINESE_LUNAR:
        return chinese.year_length(year)
    return _MODULES[calendar].year_length(year)


def month_name(calendar: CalendarId, month: int,
               is_leap_month: bool = False) -> str:
    """Textual month name; the Chinese lunar calendar uses numbered names."""
    if calendar is CalendarId.CHINESE_LUNAR:
        if not 1 <= month <= 12:
            raise InvalidMonth(f"month {month} out of range for Chinese Lunar")
        return f"Leap Month {month}" if is_leap_month else f"Month {month}"
    names = _MODULES[calendar].MONTH_NAMES
    if not 1 <= month <= len(names):
        raise InvalidMonth(
            f"month {month} out of range for {calendar.display_name}")
    return names[month - 1]


def month_position(date: CalendarDate) -> tuple[int, int]:
    """Key ordering months chronologically within one year; the Chinese
    leap month sorts right after its numbered month and Hebrew months
    follow the Tishri-first civil sequence."""
    if date.calendar is CalendarId.HEBREW:
        return hebrew.month_position(date.year, date.month), 0
    if date.calendar is CalendarId.CHINESE_LUNAR:
        return date.month, 1 if date.is_leap_month else 0
    return date.month, 0


def sort_key(date: CalendarDate) -> tuple:
    """Lexicographic (year, month-order, day) key for monotonicity checks."""
    return (date.year, *month_position(date), date.day)


def first_day_of_year(calendar: CalendarId, year: int) -> CalendarDate:
    if calendar is CalendarId.HEBREW:
        return CalendarDate(calendar, year, 7, 1)  # Tishri opens the year
    return CalendarDate(calendar, year, 1, 1)


__all__ = [
    "CALENDAR_ORDER",
    "CalendarDate",
    "CalendarId",
    "FIXED_MAX",
    "FIXED_MIN",
    "FixedDay",
    "NON_GREGORIAN",
    "add_days",
    "convert",
    "first_day_of_year",
    "format_date",
    "from_fixed",
    "month_length",
    "month_name",
    "month_position",
    "months_in_year",
    "parse_date",
    "sort_key",
    "to_fixed",
    "validate",
    "year_length",
    "year_supported",
]
