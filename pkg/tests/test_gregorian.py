from __future__ import annotations

import pytest

from crosscal.calendars import gregorian


def brute_force_day_number(year: int, month: int, day: int) -> int:
    """Independent oracle: count days from 0001-01-01 by iterating the
    leap-year rule, one year and one month at a time."""
    def leap(y: int) -> bool:
        return y % 4 == 0 and (y % 100 != 0 or y % 400 == 0)

    total = 0
    for y in range(1, year):
        total += 366 if leap(y) else 365
    lengths = [31, 29 if leap(year) else 28, 31, 30, 31, 30,
               31, 31, 30, 31, 30, 31]
    return total + sum(lengths[:month - 1]) + day


def test_epoch_convention():
    assert gregorian.to_fixed(1, 1, 1) == 1


def test_successor_day():
    assert (gregorian.to_fixed(1960, 7, 2)
            == gregorian.to_fixed(1960, 7, 1) + 1)


def test_day_count_2000_01_01_against_brute_force():
    assert brute_force_day_number(2000, 1, 1) == 730120
    assert gregorian.to_fixed(2000, 1, 1) == 730120


@pytest.mark.parametrize("ymd", [
    (1800, 1, 1), (1950, 1, 3), (1999, 12, 31), (2000, 2, 29),
    (2060, 7, 1), (2199, 12, 31),
])
def test_to_fixed_matches_brute_force(ymd):
    assert gregorian.to_fixed(*ymd) == brute_force_day_number(*ymd)


@pytest.mark.parametrize("year,expected", [
    (2000, True), (1900, False), (2023, False), (2024, True), (2100, False),
])
def test_leap_rule(year, expected):
    assert gregorian.is_leap_year(year) is expected


def test_year_length_rule():
    assert gregorian.year_length(2000) == 366
    assert gregorian.year_length(1900) == 365


def test_round_trip_across_leap_boundaries():
    for fd in range(gregorian.to_fixed(1999, 12, 20),
                    gregorian.to_fixed(2001, 3, 10)):
        y, m, d = gregorian.from_fixed(fd)
        assert gregorian.to_fixed(y, m, d) == fd


def test_from_fixed_cycle_edges():
    # last days of the 4- and 400-year cycles exercise the special branch
    assert gregorian.from_fixed(gregorian.to_fixed(2000, 12, 31)) \
        == (2000, 12, 31)
    assert gregorian.from_fixed(gregorian.to_fixed(1996, 12, 31)) \
        == (1996, 12, 31)
