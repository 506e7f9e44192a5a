"""Six-way calendar conversions on a shared fixed-day scale.

Every calendar converts through an integer day count (day 1 = the first
day of proleptic Gregorian year 1), so any pair of calendars is two
steps apart.  This walk-through converts a few dates, shifts them by
day offsets, and prints textual month names.
"""

from crosscal import (
    CalendarDate,
    CalendarId,
    RenderStyle,
    add_days,
    convert,
    format_date,
    from_fixed,
    month_name,
    render_date,
    to_fixed,
    year_length,
)

# A single Gregorian day, seen from all six calendars.
day = CalendarDate(CalendarId.GREGORIAN, 1950, 1, 3)
print(f"{format_date(day)} (fixed day {to_fixed(day)}) is:")
for calendar in CalendarId:
    equivalent = convert(day, calendar)
    print(f"  {calendar.display_name:14s} {format_date(equivalent):>14s}"
          f"   {render_date(equivalent, RenderStyle.ANSWER)}")

# Day arithmetic stays inside one calendar.
print("\nTen days before 2060-07-01:")
shifted = add_days(CalendarDate(CalendarId.GREGORIAN, 2060, 7, 1), -10)
print("  gregorian:", format_date(shifted))
print("  islamic:  ", render_date(convert(shifted, CalendarId.ISLAMIC),
                                  RenderStyle.ANSWER))

# Month names follow each calendar's own mapping.
print("\nMonth 9 across calendars:")
for calendar in CalendarId:
    print(f"  {calendar.display_name:14s} {month_name(calendar, 9)}")

# Year lengths reveal the three calendar families.
print("\nYear lengths (year containing July 2024):")
anchor = to_fixed(CalendarDate(CalendarId.GREGORIAN, 2024, 7, 1))
for calendar in CalendarId:
    year = from_fixed(anchor, calendar).year
    print(f"  {calendar.display_name:14s} year {year}: "
          f"{year_length(calendar, year)} days")
