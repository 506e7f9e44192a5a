"""Proleptic Gregorian calendar on the fixed-day (rata die) scale.

Fixed day 1 is 0001-01-01.  The leap rule (every fourth year, except
century years not divisible by 400) is applied uniformly across the
whole supported range, including years before the 1582 reform.
"""

from __future__ import annotations

YEAR_MIN = 1800
YEAR_MAX = 2199

MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)

_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def is_leap_year(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def month_length(year: int, month: int) -> int:
    if month == 2 and is_leap_year(year):
        return 29
    return _MONTH_DAYS[month - 1]


def year_length(year: int) -> int:
    return 366 if is_leap_year(year) else 365


def to_fixed(year: int, month: int, day: int) -> int:
    if month <= 2:
        correction = 0
    elif is_leap_year(year):
        correction = -1
    else:
        correction = -2
    return (365 * (year - 1) + (year - 1) // 4 - (year - 1) // 100
            + (year - 1) // 400 + (367 * month - 362) // 12 + correction + day)


def from_fixed(fd: int) -> tuple[int, int, int]:
    d0 = fd - 1
    n400, d1 = divmod(d0, 146097)
    n100, d2 = divmod(d1, 36524)
    n4, d3 = divmod(d2, 1461)
    n1 = d3 // 365
    if n100 == 4 or n1 == 4:
        # last day of a 400- or 4-year cycle: December 31 of a leap year
        return 400 * n400 + 100 * n100 + 4 * n4 + n1, 12, 31
    year = 400 * n400 + 100 * n100 + 4 * n4 + n1 + 1
    prior = fd - to_fixed(year, 1, 1)
    if fd < to_fixed(year, 3, 1):
        correction = 0
    elif is_leap_year(year):
        correction = 1
    else:
        correction = 2
    month = (12 * (prior + correction) + 373) // 367
    day = fd - to_fixed(year, month, 1) + 1
    return year, month, day
