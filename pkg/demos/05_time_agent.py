"""The plan-based agent: propose, execute, answer.

A planner emits a small JSON plan (lookups, day shifts, comparisons,
one emit); the interpreter executes it against the conversion facade.
The oracle planner below derives correct plans from each instance's
recipe, which makes the deterministic pipeline exact; the flaky wrapper
shows how parse failures surface without stopping a run.
"""

from crosscal import CalendarDate, CalendarId, GenerationConfig, generate
from crosscal.agent import (
    FlakyPlanner,
    OraclePlanner,
    execute_plan,
    parse_plan,
    run_agent,
)
from crosscal.harness import JudgeKind, ResponseRecord, aggregate, judge_all

# A hand-written plan: "what was the Islamic date 7 days before 2020-07-01?"
plan_text = """
[
  {"op": "shift_days", "bind": "d1",
   "date": {"calendar": "gregorian", "year": 2020, "month": 7, "day": 1},
   "days": -7},
  {"op": "search_calendar", "bind": "c1", "date": "d1"},
  {"op": "emit", "value": "c1.islamic"}
]
"""
plan = parse_plan(plan_text)
print("hand-written plan result:", execute_plan(plan))

# The full pipeline over a generated instance set.
instances = generate(GenerationConfig(
    evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1)))
subset = instances[::20]

transcripts = run_agent(OraclePlanner(), subset)
records = [ResponseRecord(t.instance_id, t.final_answer or "")
           for t in transcripts]
report = aggregate(judge_all(subset, records, JudgeKind.LOCAL), subset)
print(f"\noracle planner: accuracy {report.overall.accuracy:.3f} "
      f"on {report.overall.total} instances")

# Failure injection: every 8th plan is prose instead of JSON.
transcripts = run_agent(FlakyPlanner(OraclePlanner(), every=8), subset)
failures = [t for t in transcripts if t.error]
print(f"\nflaky planner: {len(failures)} parse failures "
      f"out of {len(transcripts)} (run completed)")
print("  first failure:", failures[0].error)

print("\nsample transcript:")
t = transcripts[0]
print("  question:", t.question)
print("  plan:", t.raw_plan.replace("\n", " ")[:100], "...")
print("  answer:", t.final_answer)
