"""Shaka (Indian national civil) calendar.

The year starts on Chaitra 1 = March 22 Gregorian (March 21 when the
Gregorian year is leap).  Chaitra has 30 days (31 in leap years),
months 2-6 have 31 days, months 7-12 have 30.  Saka year y is leap
exactly when Gregorian year y + 78 is leap, so year lengths mirror the
Gregorian 365/366 pattern.
"""

from __future__ import annotations

from . import gregorian

ERA_OFFSET = 78

YEAR_MIN = 1721
YEAR_MAX = 2121

MONTH_NAMES = (
    "Chaitra",
    "Vaishakha",
    "Jyeshtha",
    "Ashadha",
    "Shravana",
    "Bhadrapada",
    "Ashwin",
    "Kartika",
    "Margashirsha",
    "Pausha",
    "Magha",
    "Phalguna",
)


def is_leap_year(year: int) -> bool:
    return gregorian.is_leap_year(year + ERA_OFFSET)


def month_length(year: int, month: int) -> int:
    if month == 1:
        return 31 if is_leap_year(year) else 30
    if month <= 6:
        return 31
    return 30


def year_length(year: int) -> int:
    return 366 if is_leap_year(year) else 365


def to_fixed(year: int, month: int, day: int) -> int:
    gyear = year + ERA_OFFSET
    leap = gregorian.is_leap_year(gyear)
    start = gregorian.to_fixed(gyear, 3, 21 if leap else 22)
    if month == 1:
        return start + day - 1
    fd = start + (31 if leap else 30)
    fd += min(month - 2, 5) * 31
    if month >= 8:
        fd += (month - 7) * 30
    return fd + day - 1


def from_fixed(fd: int) -> tuple[int, int, int]:
    gyear, _, _ = gregorian.from_fixed(fd)
    year = gyear - ERA_OFFSET
    if fd < to_fixed(year, 1, 1):
        year -= 1
    yday = fd - to_fixed(year, 1, 1)
    chaitra = 31 if is_leap_year(year) else 30
    if yday < chaitra:
        return year, 1, yday + 1
    rem = yday - chaitra
    if rem < 31 * 5:
        return year, 2 + rem // 31, rem % 31 + 1
    rem -= 31 * 5
    return year, 7 + rem // 30, rem % 30 + 1
