"""Command-line entry point for batch workflows.

Subcommands: convert (six-way date/festival lookup), generate (write
instance files), evaluate (run a model or mock over an instance file,
judge, and report), agent (the plan-based pipeline), and report (render
a report file as text or CSV tables).

Exit codes: 0 success, 2 usage errors, 3 data/validation errors,
4 upstream service failures.  Auth tokens come only from the
environment (CROSSCAL_API_TOKEN), never from flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import agent as agent_mod
from .calendars import CalendarId, format_date, parse_date
from .errors import AuthError, CrosscalError, MalformedResponse, Timeout
from .facade import SearchRequest, search_calendar
from .generator import (
    GenerationConfig,
    PolarMode,
    default_evaluation_dates,
    generate,
    read_instances,
    write_instances,
)
from .harness import (
    GoldResponder,
    JudgeKind,
    ModelClient,
    NoisyResponder,
    ResponseRecord,
    aggregate,
    judge_all,
    run_model,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_UPSTREAM = 4


def _parse_offsets(spec: str) -> tuple[int, ...]:
    """Accept "1-10" ranges or "1,2,3" lists."""
    spec = spec.strip()
    if "-" in spec and "," not in spec:
        lo, hi = spec.split("-", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(x) for x in spec.split(",") if x.strip())


def _client_from_args(args) -> ModelClient:
    if not args.endpoint or not args.model:
        raise SystemExit("--endpoint and --model are required for live runs "
                         "(or use a --mock client)")
    return ModelClient(endpoint=args.endpoint, model=args.model,
                       timeout=args.timeout, max_retries=args.retries)


def cmd_convert(args) -> int:
    calendar = CalendarId.parse(args.calendar)
    if args.date:
        date = parse_date(calendar, args.date)
        req = SearchRequest(calendar, date.year, date.month, date.day,
                            is_lunar_leap_month=date.is_leap_month
                            or args.leap_month)
    elif args.festival:
        if args.year is None:
            raise SystemExit("--festival requires --year")
        req = SearchRequest(calendar, args.year, festival_name=args.festival)
    else:
        raise SystemExit("provide --date or --year with --festival")
    entry = search_calendar(req)
    print(json.dumps(entry.as_dict(), indent=2))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.all_dates:
        dates = default_evaluation_dates()
    elif args.date:
        dates = [parse_date(CalendarId.GREGORIAN, args.date)]
    else:
        raise SystemExit("provide --date or --all-dates")
    out = Path(args.out)
    multiple = len(dates) > 1
    if multiple:
        out.mkdir(parents=True, exist_ok=True)
    total = 0
    for date in dates:
        config = GenerationConfig(
            evaluation_date=date,
            day_offsets=_parse_offsets(args.day_offsets),
            week_offsets=_parse_offsets(args.week_offsets),
            year_offsets=_parse_offsets(args.year_offsets),
            polar_mode=PolarMode(args.polar_mode),
            seed=args.seed,
        )
        instances = generate(config)
        dest = out / f"instances-{format_date(date)}.jsonl" if multiple else out
        count = write_instances(instances, dest)
        total += count
        print(f"{dest}: {count} instances")
    if multiple:
        print(f"total: {total} instances over {len(dates)} dates")
    return EXIT_OK


def _judge_client(args) -> ModelClient | None:
    if args.judge != "llm":
        return None
    if not args.judge_endpoint or not args.judge_model:
        raise SystemExit("--judge llm requires --judge-endpoint and "
                         "--judge-model")
    return ModelClient(endpoint=args.judge_endpoint, model=args.judge_model,
                       timeout=args.timeout, max_retries=args.retries)


def _write_verdicts(verdicts, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in verdicts:
            fh.write(json.dumps({
                "id": v.instance_id,
                "response": v.response,
                "accuracy": v.accuracy,
                "judge": v.judge_kind.value,
                "note": v.note,
            }, ensure_ascii=False) + "\n")


def cmd_evaluate(args) -> int:
    instances = read_instances(args.instances)
    if args.mock == "gold":
        client = GoldResponder()
    elif args.mock == "noise":
        client = NoisyResponder(seed=args.seed)
    else:
        client = _client_from_args(args)
    records = run_model(client, instances, concurrency=args.concurrency)
    kind = JudgeKind(args.judge)
    verdicts = judge_all(instances, records, kind, _judge_client(args))
    report = aggregate(verdicts, instances, records,
                       with_significance=args.significance, seed=args.seed)
    if args.out_verdicts:
        _write_verdicts(verdicts, args.out_verdicts)
    if args.out_report:
        report.write(args.out_report)
    print(f"instances: {report.overall.total}  "
          f"accuracy: {report.overall.accuracy:.4f}")
    return EXIT_OK


def cmd_agent(args) -> int:
    instances = read_instances(args.instances)
    if args.mock_planner == "oracle":
        planner = agent_mod.OraclePlanner()
    elif args.mock_planner == "flaky":
        planner = agent_mod.FlakyPlanner(agent_mod.OraclePlanner(),
                                         every=args.flaky_every)
    elif args.endpoint and args.model:
        planner = agent_mod.ModelPlanner(_client_from_args(args))
    else:
        raise SystemExit("provide --mock-planner or --endpoint/--model")
    transcripts = agent_mod.run_agent(planner, instances)
    if args.out_transcripts:
        agent_mod.write_transcripts(transcripts, args.out_transcripts)
    answers = {t.instance_id: t.final_answer or "" for t in transcripts}
    records = [ResponseRecord(i.id, answers.get(i.id, "")) for i in instances]
    verdicts = judge_all(instances, records, JudgeKind.LOCAL)
    report = aggregate(verdicts, instances)
    failures = sum(1 for t in transcripts if t.error)
    if args.out_report:
        report.write(args.out_report)
    print(f"instances: {report.overall.total}  "
          f"accuracy: {report.overall.accuracy:.4f}  "
          f"plan failures: {failures}")
    return EXIT_OK


def cmd_report(args) -> int:
    data = json.loads(Path(args.report).read_text(encoding="utf-8"))
    if args.csv:
        _report_csv(data)
    else:
        _report_text(data)
    return EXIT_OK


def _report_text(data: dict) -> None:
    print(f"overall: {data['overall']['correct']}/{data['overall']['total']}"
          f" = {data['overall']['accuracy']:.4f}")
    for section in ("by_evaluation_date", "by_reasoning_type",
                    "by_question_format", "by_direction"):
        print(f"\n{section}")
        for key, cell in data[section].items():
            print(f"  {key:28s} {cell['correct']:6d}/{cell['total']:<6d}"
                  f" = {cell['accuracy']:.4f}")
    if data.get("significance"):
        print("\nsignificance (bootstrap)")
        for name, cell in data["significance"].items():
            lo, hi = cell["ci_95"]
            print(f"  {name:36s} diff={cell['mean_difference']:+.4f} "
                  f"ci=[{lo:+.4f}, {hi:+.4f}] p={cell['p_value']:.2g}")


def _report_csv(data: dict) -> None:
    print("section,key,total,correct,accuracy")
    print(f"overall,,{data['overall']['total']},{data['overall']['correct']},"
          f"{data['overall']['accuracy']:.6f}")
    for section in ("by_evaluation_date", "by_reasoning_type",
                    "by_question_format", "by_direction"):
        for key, cell in data[section].items():
            print(f"{section},{key},{cell['total']},{cell['correct']},"
                  f"{cell['accuracy']:.6f}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscal",
        description="Cross-calendar conversion and temporal-reasoning "
                    "benchmark tooling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="six-way date or festival lookup")
    p.add_argument("--calendar", required=True)
    p.add_argument("--date", help='canonical date string, e.g. "2024-06-01"')
    p.add_argument("--year", type=int)
    p.add_argument("--festival")
    p.add_argument("--leap-month", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("generate", help="write benchmark instance files")
    p.add_argument("--date", help="one Gregorian evaluation date")
    p.add_argument("--all-dates", action="store_true",
                   help="the full 21-date grid (July 1st, 1960-2060, step 5)")
    p.add_argument("--out", required=True,
                   help="output file (or directory with --all-dates)")
    p.add_argument("--day-offsets", default="1-10")
    p.add_argument("--week-offsets", default="1-10")
    p.add_argument("--year-offsets", default="1-5")
    p.add_argument("--polar-mode", choices=["all_yes", "perturbed"],
                   default="all_yes")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evaluate", help="run + judge a model over instances")
    p.add_argument("--instances", required=True)
    p.add_argument("--mock", choices=["gold", "noise"])
    p.add_argument("--endpoint")
    p.add_argument("--model")
    p.add_argument("--judge", choices=["local", "llm"], default="local")
    p.add_argument("--judge-endpoint")
    p.add_argument("--judge-model")
    p.add_argument("--concurrency", type=int, default=1)
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--significance", action="store_true")
    p.add_argument("--out-verdicts")
    p.add_argument("--out-report")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("agent", help="plan-execute-answer agent pipeline")
    p.add_argument("--instances", required=True)
    p.add_argument("--mock-planner", choices=["oracle", "flaky"])
    p.add_argument("--flaky-every", type=int, default=10)
    p.add_argument("--endpoint")
    p.add_argument("--model")
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("--out-transcripts")
    p.add_argument("--out-report")
    p.set_defaults(func=cmd_agent)

    p = sub.add_parser("report", help="render a report file as tables")
    p.add_argument("--report", required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return EXIT_USAGE
        raise
    except (AuthError, Timeout, MalformedResponse) as exc:
        print(f"upstream error: {exc}", file=sys.stderr)
        return EXIT_UPSTREAM
    except (CrosscalError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
