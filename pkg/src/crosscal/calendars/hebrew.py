"""Hebrew calendar from the molad computation and the four postponement
rules (dehiyyot).

Months are numbered Nisan = 1 through Adar = 12, with Veadar = 13 in
leap years; the year number increments at Tishri (month 7), so the
months of year y run Tishri..Adar/Veadar followed by Nisan..Elul.
Leap years sit at positions {0, 3, 6, 8, 11, 14, 17} of the 19-year
cycle.  Year lengths land in {353, 354, 355} (common) and {383, 384,
385} (leap); the variable days live in Heshvan (8) and Kislev (9).
"""

from __future__ import annotations

from functools import lru_cache

EPOCH = -1373428

YEAR_MIN = 5560
YEAR_MAX = 5960

MONTH_NAMES = (
    "Nisan",
    "Iyyar",
    "Sivan",
    "Tammuz",
    "Av",
    "Elul",
    "Tishri",
    "Heshvan",
    "Kislev",
    "Teveth",
    "Shevat",
    "Adar (Adar I)",
    "Veadar (Adar II)",
)

# parts (halakim): 1080 per hour, 25920 per day
_NOON = 19440
_AM3_11_20 = 9924
_AM9_32_43 = 16789


def is_leap_year(year: int) -> bool:
    return (7 * year + 1) % 19 < 7


def months_in_year(year: int) -> int:
    return 13 if is_leap_year(year) else 12


@lru_cache(maxsize=2048)
def _elapsed_days(year: int) -> int:
    """Days from the calendar's origin to Tishri 1 of `year`, after the
    postponement rules."""
    months = (235 * ((year - 1) // 19) + 12 * ((year - 1) % 19)
              + (7 * ((year - 1) % 19) + 1) // 19)
    parts = 204 + 793 * (months % 1080)
    hours = 5 + 12 * months + 793 * (months // 1080) + parts // 1080
    day = 1 + 29 * months + hours // 24
    p = 1080 * (hours % 24) + parts % 1080
    if (p >= _NOON
            or (day % 7 == 2 and p >= _AM3_11_20 and not is_leap_year(year))
            or (day % 7 == 1 and p >= _AM9_32_43 and is_leap_year(year - 1))):
        day += 1
    if day % 7 in (0, 3, 5):  # never Sunday, Wednesday, Friday
        day += 1
    return day


def new_year(year: int) -> int:
    """Fixed day of Tishri 1."""
    return EPOCH + _elapsed_days(year)


def year_length(year: int) -> int:
    return _elapsed_days(year + 1) - _elapsed_days(year)


def month_length(year: int, month: int) -> int:
    if month in (2, 4, 6, 10, 13):
        return 29
    if month == 8:
        return 30 if year_length(year) % 10 == 5 else 29
    if month == 9:
        return 29 if year_length(year) % 10 == 3 else 30
    if month == 12:
        return 30 if is_leap_year(year) else 29
    return 30


@lru_cache(maxsize=2048)
def _month_starts(year: int) -> tuple[tuple[int, ...], int]:
    """Fixed day of day 1 of every month of `year`, indexed by month
    number, plus the month count.  Index 0 is unused."""
    n = months_in_year(year)
    starts = [0] * (n + 1)
    fd = new_year(year)
    for m in range(7, n + 1):  # Tishri through Adar/Veadar
        starts[m] = fd
        fd += month_length(year, m)
    for m in range(1, 7):  # Nisan through Elul
        starts[m] = fd
        fd += month_length(year, m)
    return tuple(starts), n


def to_fixed(year: int, month: int, day: int) -> int:
    starts, _ = _month_starts(year)
    return starts[month] + day - 1


def from_fixed(fd: int) -> tuple[int, int, int]:
    year = (fd - EPOCH) * 98496 // 35975351
    while new_year(year + 1) <= fd:
        year += 1
    while new_year(year) > fd:
        year -= 1
    starts, n = _month_starts(year)
    # chronological order within the year: 7..n, then 1..6
    month = 6  # Elul; overwritten unless fd falls in it
    for m in list(range(7, n + 1)) + list(range(1, 7)):
        if starts[m] <= fd < starts[m] + month_length(year, m):
            month = m
            break
    day = fd - starts[month] + 1
    return year, month, day


def month_position(year: int, month: int) -> int:
    """Chronological position of `month` within year (0-based), used for
    ordering checks."""
    if month >= 7:
        return month - 7
    return months_in_year(year) - 6 + month - 1
