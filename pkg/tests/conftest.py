from __future__ import annotations

import pytest

from crosscal.calendars import CalendarDate, CalendarId
from crosscal.generator import GenerationConfig, generate


@pytest.fixture(scope="session")
def instances_2020():
    """Default instance set for evaluation date 2020-07-01, shared across
    test modules (generation is deterministic)."""
    config = GenerationConfig(
        evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1))
    return generate(config)


def gdate(year: int, month: int, day: int) -> CalendarDate:
    return CalendarDate(CalendarId.GREGORIAN, year, month, day)
