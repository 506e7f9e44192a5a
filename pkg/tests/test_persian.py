from __future__ import annotations

import pytest

from crosscal.calendars import gregorian, persian


def test_conversion_anchor_1950():
    fd = gregorian.to_fixed(1950, 1, 3)
    assert persian.from_fixed(fd) == (1328, 10, 13)  # 13 Dey
    assert persian.to_fixed(1328, 10, 13) == fd


@pytest.mark.parametrize("persian_year,gregorian_ymd", [
    (1400, (2021, 3, 21)),
    (1403, (2024, 3, 20)),
    (1339, (1960, 3, 21)),
])
def test_nowruz_anchors(persian_year, gregorian_ymd):
    # published 1 Farvardin dates
    fd = persian.to_fixed(persian_year, 1, 1)
    assert gregorian.from_fixed(fd) == gregorian_ymd


def test_month_length_pattern():
    year = 1400
    lengths = [persian.month_length(year, m) for m in range(1, 13)]
    assert lengths[:6] == [31] * 6
    assert lengths[6:11] == [30] * 5
    assert lengths[11] in (29, 30)


def test_year_lengths_sum_months():
    for year in range(1320, 1480):
        total = sum(persian.month_length(year, m) for m in range(1, 13))
        assert total == persian.year_length(year)
        assert total in (365, 366)


def test_leap_years_spaced_four_or_five():
    leaps = [y for y in range(1300, 1500) if persian.is_leap_year(y)]
    gaps = {b - a for a, b in zip(leaps, leaps[1:])}
    assert gaps <= {4, 5}


def test_round_trip_decades():
    start = persian.to_fixed(1335, 1, 1)
    end = persian.to_fixed(1345, 1, 1)
    for fd in range(start, end):
        y, m, d = persian.from_fixed(fd)
        assert persian.to_fixed(y, m, d) == fd
