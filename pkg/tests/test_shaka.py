from __future__ import annotations

import pytest

from crosscal.calendars import gregorian, shaka


def test_conversion_anchor_1950():
    fd = gregorian.to_fixed(1950, 1, 3)
    assert shaka.from_fixed(fd) == (1871, 10, 13)  # 13 Pausha
    assert shaka.to_fixed(1871, 10, 13) == fd


def test_year_start_rule():
    # Chaitra 1 = March 22, or March 21 in Gregorian leap years
    assert gregorian.from_fixed(shaka.to_fixed(1945, 1, 1)) == (2023, 3, 22)
    assert gregorian.from_fixed(shaka.to_fixed(1946, 1, 1)) == (2024, 3, 21)


def test_leap_coupled_to_gregorian():
    for year in range(1900, 2000):
        assert shaka.is_leap_year(year) == gregorian.is_leap_year(year + 78)


def test_month_length_pattern():
    common, leap = 1945, 1946
    assert shaka.month_length(common, 1) == 30
    assert shaka.month_length(leap, 1) == 31
    for m in range(2, 7):
        assert shaka.month_length(common, m) == 31
    for m in range(7, 13):
        assert shaka.month_length(common, m) == 30


def test_year_lengths_sum_months():
    for year in range(1880, 2000):
        total = sum(shaka.month_length(year, m) for m in range(1, 13))
        assert total == shaka.year_length(year)
        assert total in (365, 366)


@pytest.mark.parametrize("shaka_ymd,gregorian_ymd", [
    ((1946, 3, 11), (2024, 6, 1)),
    ((1882, 4, 10), (1960, 7, 1)),
])
def test_additional_anchors(shaka_ymd, gregorian_ymd):
    assert shaka.to_fixed(*shaka_ymd) == gregorian.to_fixed(*gregorian_ymd)


def test_round_trip_decade():
    start = shaka.to_fixed(1880, 1, 1)
    end = shaka.to_fixed(1890, 1, 1)
    for fd in range(start, end):
        y, m, d = shaka.from_fixed(fd)
        assert shaka.to_fixed(y, m, d) == fd
