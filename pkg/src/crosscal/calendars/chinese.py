"""Chinese lunisolar calendar, table-driven for lunar years 1899-2100.

A lunar year is labelled with the Gregorian year containing its New
Year, runs 12 months (13 with an intercalary "leap" month inserted
after the month it repeats), and each month has 29 or 30 days.  One
packed integer per year encodes the month lengths and the leap-month
number; fixed-day anchors are accumulated from the New Year of lunar
1899 (fixed day 693271 = 1899-02-10 Gregorian).

Table entry layout: bits 0-12, LSB first, hold one bit per month in
chronological order (1 = 30 days); bits 13-16 hold the leap month
number (0 = no leap month).
"""

from __future__ import annotations

from bisect import bisect_right

from ..errors import OutOfSupportedRange

YEAR_MIN = 1899
YEAR_MAX = 2100

_ANCHOR = 693271  # New Year of lunar 1899

_YEAR_CODES = (
    0x00ad5, 0x116d2, 0x00752, 0x00ea5, 0x0b64a, 0x0064b, 0x00a9b, 0x09556,
    0x0056a, 0x00b59, 0x05752, 0x00752, 0x0db25, 0x00b25, 0x00a4b, 0x0b4ab,
    0x002ad, 0x0056b, 0x04b69, 0x00da9, 0x0fd92, 0x00e92, 0x00d25, 0x0ba4d,
    0x00a56, 0x002b6, 0x095b5, 0x006d4, 0x00ea9, 0x05e92, 0x00e92, 0x0cd26,
    0x0052b, 0x00a57, 0x0b2b6, 0x00b5a, 0x006d4, 0x06ec9, 0x00749, 0x0f693,
    0x00a93, 0x0052b, 0x0ca5b, 0x00aad, 0x0056a, 0x09b55, 0x00ba4, 0x00b49,
    0x05a93, 0x00a95, 0x0f52d, 0x00536, 0x00aad, 0x0b5aa, 0x005b2, 0x00da5,
    0x07d4a, 0x00d4a, 0x10a95, 0x00a97, 0x00556, 0x0cab5, 0x00ad5, 0x006d2,
    0x08ea5, 0x00ea5, 0x0064a, 0x06c97, 0x00a9b, 0x0f55a, 0x0056a, 0x00b69,
    0x0b752, 0x00b52, 0x00b25, 0x0964b, 0x00a4b, 0x114ab, 0x002ad, 0x0056d,
    0x0cb69, 0x00da9, 0x00d92, 0x09d25, 0x00d25, 0x15a4d, 0x00a56, 0x002b6,
    0x0c5b5, 0x006d5, 0x00ea9, 0x0be92, 0x00e92, 0x00d26, 0x06a56, 0x00a57,
    0x114d6, 0x0035a, 0x006d5, 0x0b6c9, 0x00749, 0x00693, 0x0952b, 0x0052b,
    0x00a5b, 0x0555a, 0x0056a, 0x0fb55, 0x00ba4, 0x00b49, 0x0ba93, 0x00a95,
    0x0052d, 0x08aad, 0x00ab5, 0x135aa, 0x005d2, 0x00da5, 0x0dd4a, 0x00d4a,
    0x00c95, 0x0952e, 0x00556, 0x00ab5, 0x055b2, 0x006d2, 0x0cea5, 0x00725,
    0x0064b, 0x0ac97, 0x00cab, 0x0055a, 0x06ad6, 0x00b69, 0x17752, 0x00b52,
    0x00b25, 0x0da4b, 0x00a4b, 0x004ab, 0x0a55b, 0x005ad, 0x00b6a, 0x05b52,
    0x00d92, 0x0fd25, 0x00d25, 0x00a55, 0x0b4ad, 0x004b6, 0x005b5, 0x06daa,
    0x00ec9, 0x11e92, 0x00e92, 0x00d26, 0x0ca56, 0x00a57, 0x00556, 0x086d5,
    0x00755, 0x00749, 0x06e93, 0x00693, 0x0f52b, 0x0052b, 0x00a5b, 0x0b55a,
    0x0056a, 0x00b65, 0x0974a, 0x00b4a, 0x11a95, 0x00a95, 0x0052d, 0x0caad,
    0x00ab5, 0x005aa, 0x08ba5, 0x00da5, 0x00d4a, 0x07c95, 0x00c96, 0x0f94e,
    0x00556, 0x00ab5, 0x0b5b2, 0x006d2, 0x00ea5, 0x08e4a, 0x0068b, 0x10c97,
    0x004ab, 0x0055b, 0x0cad6, 0x00b6a, 0x00752, 0x09725, 0x00b45, 0x00a8b,
    0x0549b, 0x004ab,
)


def leap_month(year: int) -> int:
    """Intercalary month number of `year`, or 0 if none."""
    _check_year(year)
    return _YEAR_CODES[year - YEAR_MIN] >> 13


def _check_year(year: int) -> None:
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise OutOfSupportedRange(
            f"lunar year {year} outside table coverage {YEAR_MIN}-{YEAR_MAX}")


def month_lengths(year: int) -> tuple[int, ...]:
    """Month lengths in chronological order (12 entries, 13 in leap years)."""
    _check_year(year)
    code = _YEAR_CODES[year - YEAR_MIN]
    n = 13 if code >> 13 else 12
    return tuple(30 if (code >> i) & 1 else 29 for i in range(n))


def _position(year: int, month: int, is_leap: bool) -> int:
    """Chronological index of (month, is_leap) within `year`."""
    leap = leap_month(year)
    if is_leap:
        return month  # inserted right after its numbered month
    if leap and month > leap:
        return month
    return month - 1


def months_in_year(year: int) -> int:
    return 13 if leap_month(year) else 12


def is_leap_year(year: int) -> bool:
    """True when the year carries an intercalary month."""
    return leap_month(year) != 0


def _year_starts() -> tuple[int, ...]:
    starts = [_ANCHOR]
    for year in range(YEAR_MIN, YEAR_MAX + 1):
        starts.append(starts[-1] + sum(month_lengths(year)))
    return tuple(starts)


_YEAR_STARTS = _year_starts()  # index i -> New Year of YEAR_MIN + i; one extra

FIXED_MIN = _YEAR_STARTS[0]
FIXED_MAX = _YEAR_STARTS[-1] - 1  # last day of lunar YEAR_MAX


def new_year(year: int) -> int:
    """Fixed day of month 1 day 1."""
    _check_year(year)
    return _YEAR_STARTS[year - YEAR_MIN]


def year_length(year: int) -> int:
    return sum(month_lengths(year))


def month_length(year: int, month: int, is_leap: bool = False) -> int:
    return month_lengths(year)[_position(year, month, is_leap)]


def valid_month(year: int, month: int, is_leap: bool) -> bool:
    if not 1 <= month <= 12:
        return False
    if is_leap and leap_month(year) != month:
        return False
    return True


def to_fixed(year: int, month: int, day: int, is_leap: bool = False) -> int:
    lengths = month_lengths(year)
    pos = _position(year, month, is_leap)
    return new_year(year) + sum(lengths[:pos]) + day - 1


def from_fixed(fd: int) -> tuple[int, int, int, bool]:
    if not FIXED_MIN <= fd <= FIXED_MAX:
        raise OutOfSupportedRange(f"fixed day {fd} outside lunar table coverage")
    year = YEAR_MIN + bisect_right(_YEAR_STARTS, fd) - 1
    off = fd - _YEAR_STARTS[year - YEAR_MIN]
    leap = leap_month(year)
    for pos, length in enumerate(month_lengths(year)):
        if off < length:
            break
        off -= length
    if leap == 0 or pos < leap:
        return year, pos + 1, off + 1, False
    if pos == leap:
        return year, leap, off + 1, True
    return year, pos, off + 1, False
