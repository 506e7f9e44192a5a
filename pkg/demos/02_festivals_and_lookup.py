"""Festival registry and the unified search_calendar lookup.

Twenty-one festivals across four calendars, each a fixed (month, day)
rule in its home calendar.  search_calendar accepts either a full date
or a (year, festival) pair and returns the same day in all six
calendars.
"""

import json

from crosscal import (
    CalendarId,
    SearchRequest,
    festival_date,
    format_date,
    list_festivals,
    search_calendar,
)

# What's registered where.
for calendar in CalendarId:
    names = list_festivals(calendar)
    label = ", ".join(names) if names else "(none)"
    print(f"{calendar.display_name:14s} {label}")

# A festival request resolves in its home calendar first.
print("\nChinese New Year 2025:")
entry = search_calendar(SearchRequest(CalendarId.CHINESE_LUNAR, 2025,
                                      festival_name="Chinese New Year"))
print(json.dumps(entry.as_dict(), indent=2))

# Fixed home-calendar rules drift against the Gregorian year.
print("\nEid al-Fitr (1 Shawwal) drifting through Gregorian years:")
for year in range(1440, 1448):
    home = festival_date(CalendarId.ISLAMIC, year, "Eid al-Fitr")
    entry = search_calendar(SearchRequest(CalendarId.ISLAMIC, year,
                                          festival_name="Eid al-Fitr"))
    print(f"  AH {year}: {format_date(home)} -> "
          f"{entry[CalendarId.GREGORIAN]}")

# Date requests work the same way.
print("\nA plain date request:")
entry = search_calendar(SearchRequest(CalendarId.GREGORIAN, 2024, 6, 1))
print(json.dumps(entry.as_dict(), indent=2))
