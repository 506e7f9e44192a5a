"""Optional live-model smoke run (non-gating).

Evaluates a real chat-completion endpoint on a small slice of the
benchmark (at least 40 instances).  Verifying a frontier model's actual
accuracy takes live API access and is deliberately NOT part of the test
suite; nothing here gates a build.

Configuration comes from the environment:

    CROSSCAL_ENDPOINT   chat-completions URL
    CROSSCAL_MODEL      model name
    CROSSCAL_API_TOKEN  bearer token (optional, if the endpoint needs it)

Usage:
    python demos/live_model_smoke.py [instance-count]
"""

from __future__ import annotations

import os
import sys

from crosscal import CalendarDate, CalendarId, GenerationConfig, generate
from crosscal.harness import (
    JudgeKind,
    ModelClient,
    aggregate,
    judge_all,
    run_model,
)

SMOKE_INSTANCES = 40


def main() -> int:
    endpoint = os.environ.get("CROSSCAL_ENDPOINT")
    model = os.environ.get("CROSSCAL_MODEL")
    if not endpoint or not model:
        print("set CROSSCAL_ENDPOINT and CROSSCAL_MODEL to run the live "
              "smoke; skipping.")
        return 0

    count = max(SMOKE_INSTANCES,
                int(sys.argv[1]) if len(sys.argv) > 1 else SMOKE_INSTANCES)
    instances = generate(GenerationConfig(
        evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1)))
    step = max(1, len(instances) // count)
    subset = instances[::step][:count]

    client = ModelClient(endpoint=endpoint, model=model)
    print(f"querying {model} on {len(subset)} instances ...")
    records = run_model(client, subset, concurrency=4)
    failures = sum(1 for r in records if r.error)
    verdicts = judge_all(subset, records, JudgeKind.LOCAL)
    report = aggregate(verdicts, subset)
    print(f"accuracy: {report.overall.accuracy:.3f} "
          f"({report.overall.correct}/{report.overall.total}, "
          f"{failures} request failures)")
    for name, cell in report.by_reasoning_type.items():
        print(f"  {name:16s} {cell.correct}/{cell.total}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
