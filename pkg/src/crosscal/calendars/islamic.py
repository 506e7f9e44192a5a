"""Tabular Islamic (Hijri) calendar.

Deterministic arithmetic approximation of the observational calendar:
a 30-year cycle with leap years {2, 5, 7, 10, 13, 16, 18, 21, 24, 26,
29}, odd months of 30 days, even months of 29, and a 30th day added to
month 12 in leap years.  1 Muharram 1 AH falls on fixed day 227015.
Real-world observed dates can differ by a day from this rule.
"""

from __future__ import annotations

EPOCH = 227015

YEAR_MIN = 1214
YEAR_MAX = 1626

MONTH_NAMES = (
    "Muharram",
    "Safar",
    "Rabi' al-Awwal",
    "Rabi' al-Thani (Rabi' al-Akhir)",
    "Jumada al-Awwal",
    "Jumada al-Thani (Jumada al-Akhir)",
    "Rajab",
    "Sha'ban",
    "Ramadan",
    "Shawwal",
    "Dhu al-Qi'dah",
    "Dhu al-Hijjah",
)


def is_leap_year(year: int) -> bool:
    return (11 * year + 14) % 30 < 11


def month_length(year: int, month: int) -> int:
    if month % 2 == 1 or (month == 12 and is_leap_year(year)):
        return 30
    return 29


def year_length(year: int) -> int:
    return 355 if is_leap_year(year) else 354


def to_fixed(year: int, month: int, day: int) -> int:
    return (EPOCH - 1 + 354 * (year - 1) + (3 + 11 * year) // 30
            + 29 * (month - 1) + month // 2 + day)


def from_fixed(fd: int) -> tuple[int, int, int]:
    year = (30 * (fd - EPOCH) + 10646) // 10631
    while to_fixed(year + 1, 1, 1) <= fd:
        year += 1
    while to_fixed(year, 1, 1) > fd:
        year -= 1
    month = 1
    while fd >= to_fixed(year, month, 1) + month_length(year, month):
        month += 1
    day = fd - to_fixed(year, month, 1) + 1
    return year, month, day
