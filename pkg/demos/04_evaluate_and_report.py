"""Evaluation harness: responses, judging, slicing, significance.

A scripted responder stands in for a live model here.  The gold
responder reproduces every gold answer (accuracy 1.0); the noisy one
corrupts a seeded fraction, which gives the slicing and bootstrap
machinery something to work with.
"""

from crosscal import CalendarDate, CalendarId, GenerationConfig, generate
from crosscal.harness import (
    GoldResponder,
    JudgeKind,
    NoisyResponder,
    aggregate,
    bootstrap_diff,
    judge,
    judge_all,
    run_model,
)

instances = generate(GenerationConfig(
    evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1)))

# The local judge compares structured values, so formatting never
# decides a verdict.
print("format-insensitive judging:")
for response in ("2020-07-05", "July 5, 2020", "July 6, 2020"):
    verdict = judge("q", response, "July 5, 2020")
    print(f"  {response!r} vs 'July 5, 2020' -> accuracy {verdict.accuracy}")

# Gold responder: the deterministic pipeline is exact.
records = run_model(GoldResponder(), instances)
report = aggregate(judge_all(instances, records, JudgeKind.LOCAL), instances)
print(f"\ngold responder accuracy: {report.overall.accuracy:.3f} "
      f"on {report.overall.total} instances")

# Noisy responder: aggregation slices the errors.
records = run_model(NoisyResponder(seed=7), instances)
report = aggregate(judge_all(instances, records), instances,
                   with_significance=True, bootstrap_iterations=2000, seed=7)
print(f"\nnoisy responder accuracy: {report.overall.accuracy:.3f}")
for name, cell in report.by_question_format.items():
    print(f"  {name:10s} {cell.correct}/{cell.total} = {cell.accuracy:.3f}")
for name, cell in report.significance.items():
    lo, hi = cell["ci_95"]
    print(f"  {name}: diff={cell['mean_difference']:+.3f} "
          f"ci=[{lo:+.3f}, {hi:+.3f}] p={cell['p_value']:.2g}")

# The bootstrap directly, on synthetic accuracy groups.
import numpy as np  # noqa: E402

rng = np.random.default_rng(0)
strong = (rng.random(2000) < 0.6).astype(int)
weak = (rng.random(2000) < 0.4).astype(int)
result = bootstrap_diff(strong, weak, iterations=10000, seed=0)
print(f"\nsynthetic 0.2 gap: diff={result.mean_difference:+.3f} "
      f"ci=[{result.ci_low:+.3f}, {result.ci_high:+.3f}] "
      f"p={result.p_value:.2g}")
