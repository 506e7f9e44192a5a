"""Persian (Solar Hijri) calendar via the 2820-year-cycle arithmetic rule.

Months 1-6 have 31 days, 7-11 have 30, and month 12 has 29 (30 in leap
years).  1 Farvardin 1 falls on fixed day 226896.
"""

from __future__ import annotations

EPOCH = 226896

YEAR_MIN = 1178
YEAR_MAX = 1578

MONTH_NAMES = (
    "Farvardin",
    "Ordibehesht",
    "Khordad",
    "Tir",
    "Mordad",
    "Shahrivar",
    "Mehr",
    "Aban",
    "Azar",
    "Dey",
    "Bahman",
    "Esfand",
)


def _cycle_year(year: int) -> int:
    return year - 474 if year > 0 else year - 473


def is_leap_year(year: int) -> bool:
    y = _cycle_year(year)
    return ((y % 2820 + 474 + 38) * 682) % 2816 < 682


def month_length(year: int, month: int) -> int:
    if month <= 6:
        return 31
    if month <= 11:
        return 30
    return 30 if is_leap_year(year) else 29


def year_length(year: int) -> int:
    return 366 if is_leap_year(year) else 365


def to_fixed(year: int, month: int, day: int) -> int:
    y = _cycle_year(year)
    epyear = 474 + y % 2820
    mdays = (month - 1) * 31 if month <= 7 else (month - 1) * 30 + 6
    return (day + mdays + (epyear * 682 - 110) // 2816 + (epyear - 1) * 365
            + (y // 2820) * 1029983 + EPOCH - 1)


def from_fixed(fd: int) -> tuple[int, int, int]:
    depoch = fd - to_fixed(475, 1, 1)
    cycle, cyear = divmod(depoch, 1029983)
    if cyear == 1029982:
        ycycle = 2820
    else:
        a1, a2 = divmod(cyear, 366)
        ycycle = (2134 * a1 + 2816 * a2 + 2815) // 1028522 + a1 + 1
    year = ycycle + 2820 * cycle + 474
    if year <= 0:
        year -= 1
    yday = fd - to_fixed(year, 1, 1) + 1
    if yday <= 186:
        month = -(-yday // 31)
    else:
        month = -(-(yday - 6) // 30)
    day = fd - to_fixed(year, month, 1) + 1
    return year, month, day
