"""Dynamic benchmark generation from one evaluation date.

One Gregorian date expands deterministically into 1,780 question/answer
instances: 800 date-based (day and week offsets, both directions, five
calendar pairs) and 980 festival-based (year offsets over 49
source-festival-target combinations).  Rerunning with the same
configuration reproduces the file byte for byte.
"""

from collections import Counter
from pathlib import Path

from crosscal import (
    CalendarDate,
    CalendarId,
    GenerationConfig,
    default_evaluation_dates,
    generate,
    write_instances,
)

config = GenerationConfig(
    evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1))
instances = generate(config)

print(f"instances for 2020-07-01: {len(instances)}")
by_type = Counter(i.recipe.reasoning_type.value for i in instances)
by_direction = Counter(i.recipe.direction.value for i in instances)
print("by reasoning type:", dict(by_type))
print("by direction:", dict(by_direction))

print("\nfirst instance:")
print(" ", instances[0].question)
print("  gold:", instances[0].gold_answer)

polar = [i for i in instances if i.gold_answer in ("Yes", "No")]
print(f"\npolar instances: {len(polar)}, "
      f"gold Yes: {sum(1 for i in polar if i.gold_answer == 'Yes')}")

out = Path("instances-2020-07-01.jsonl")
count = write_instances(instances, out)
print(f"\nwrote {count} records to {out}")

dates = default_evaluation_dates()
print(f"\nfull evaluation grid: {len(dates)} dates "
      f"({dates[0].year}-{dates[-1].year}), "
      f"{len(dates) * len(instances)} instances in total")
