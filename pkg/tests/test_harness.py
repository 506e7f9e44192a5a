from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from crosscal.errors import AuthError, Timeout, UnmatchedVerdict
from crosscal.harness import (
    GoldResponder,
    JudgeKind,
    ModelClient,
    NoisyResponder,
    ResponseRecord,
    aggregate,
    judge_all,
    run_model,
)


# ---------------------------------------------------------------------------
# mock responders

def test_gold_responder_matches_golds(instances_2020):
    subset = instances_2020[:40]
    records = run_model(GoldResponder(), subset)
    assert len(records) == len(subset)
    assert [r.response for r in records] == [i.gold_answer for i in subset]
    assert [r.instance_id for r in records] == [i.id for i in subset]


def test_noisy_responder_is_stable_and_sub_gold(instances_2020):
    subset = instances_2020[:200]
    noisy = NoisyResponder(seed=9)
    first = [noisy.respond(i) for i in subset]
    second = [noisy.respond(i) for i in subset]
    assert first == second
    wrong = sum(1 for i, r in zip(subset, first) if r != i.gold_answer)
    assert 0 < wrong < len(subset)
    other_seed = [NoisyResponder(seed=10).respond(i) for i in subset]
    assert other_seed != first


def test_run_model_concurrency_preserves_order(instances_2020):
    subset = instances_2020[:60]
    sequential = run_model(GoldResponder(), subset, concurrency=1)
    threaded = run_model(GoldResponder(), subset, concurrency=8)
    assert [r.instance_id for r in threaded] \
        == [r.instance_id for r in sequential]


# ---------------------------------------------------------------------------
# live client against a scripted local endpoint

class _Handler(BaseHTTPRequestHandler):
    behavior = "echo"

    def do_POST(self):
        body = json.loads(self.rfile.read(int(self.headers["Content-Length"])))
        if self.behavior == "auth":
            self.send_response(401)
            self.end_headers()
            return
        if self.behavior == "malformed":
            payload = b'{"surprise": true}'
        else:
            content = "ok:" + body["messages"][0]["content"][:20]
            payload = json.dumps({
                "choices": [{"message": {"content": content}}],
                "usage": {"completion_tokens": 7},
            }).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


@pytest.fixture()
def scripted_endpoint():
    server = HTTPServer(("127.0.0.1", 0), _Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/v1/chat/completions"
    server.shutdown()


def test_model_client_round_trip(scripted_endpoint):
    _Handler.behavior = "echo"
    client = ModelClient(endpoint=scripted_endpoint, model="test-model")
    reply = client.complete("hello there")
    assert reply.startswith("ok:")
    assert client.last_usage == {"completion_tokens": 7}


def test_model_client_auth_error(scripted_endpoint):
    _Handler.behavior = "auth"
    client = ModelClient(endpoint=scripted_endpoint, model="test-model")
    with pytest.raises(AuthError):
        client.complete("hello")
    _Handler.behavior = "echo"


def test_model_client_malformed_payload(scripted_endpoint):
    _Handler.behavior = "malformed"
    client = ModelClient(endpoint=scripted_endpoint, model="test-model")
    from crosscal.errors import MalformedResponse
    with pytest.raises(MalformedResponse):
        client.complete("hello")
    _Handler.behavior = "echo"


def test_endpoint_down_times_out_after_retries():
    client = ModelClient(endpoint="http://127.0.0.1:9/nothing",
                         model="test-model", max_retries=1, timeout=0.2)
    with pytest.raises(Timeout):
        client.complete("hello")


def test_run_model_records_failures_without_dropping(instances_2020):
    class FlakyClient:
        def __init__(self):
            self.count = 0

        def respond(self, instance):
            self.count += 1
            if self.count % 3 == 0:
                raise Timeout("scripted failure")
            return instance.gold_answer

    subset = instances_2020[:9]
    records = run_model(FlakyClient(), subset)
    assert len(records) == 9
    failed = [r for r in records if r.error]
    assert len(failed) == 3
    assert all(r.response == "" for r in failed)


# ---------------------------------------------------------------------------
# aggregation

def test_aggregate_overall_mean():
    from crosscal.calendars import CalendarDate, CalendarId
    from crosscal.generator import GenerationConfig, generate
    config = GenerationConfig(
        evaluation_date=CalendarDate(CalendarId.GREGORIAN, 2020, 7, 1))
    instances = generate(config)[:4]
    records = [ResponseRecord(i.id, i.gold_answer) for i in instances]
    records[0] = ResponseRecord(instances[0].id, "wrong answer")
    verdicts = judge_all(instances, records)
    report = aggregate(verdicts, instances)
    assert report.overall.total == 4
    assert report.overall.correct == 3
    assert report.overall.accuracy == 0.75


def test_aggregate_slices_partition_total(instances_2020):
    records = [ResponseRecord(i.id, i.gold_answer) for i in instances_2020]
    verdicts = judge_all(instances_2020, records)
    report = aggregate(verdicts, instances_2020, records)
    assert report.overall.total == 1780
    assert report.overall.accuracy == 1.0
    for section in (report.by_reasoning_type, report.by_question_format,
                    report.by_direction, report.by_evaluation_date):
        assert sum(s.total for s in section.values()) == 1780
    assert report.by_reasoning_type["date_based"].total == 800
    assert report.by_reasoning_type["festival_based"].total == 980
    # 400 date-based each way; festival-based splits 700 / 280
    assert report.by_direction["gregorian_to_others"].total == 1100
    assert report.by_direction["others_to_gregorian"].total == 680
    assert report.response_tokens_mean is None


def test_aggregate_extreme_slices(instances_2020):
    subset = instances_2020
    records = []
    for inst in subset:
        correct = inst.recipe.reasoning_type.value == "festival_based"
        records.append(ResponseRecord(
            inst.id, inst.gold_answer if correct else "nope"))
    verdicts = judge_all(subset, records)
    report = aggregate(verdicts, subset)
    assert report.by_reasoning_type["date_based"].accuracy == 0.0
    assert report.by_reasoning_type["festival_based"].accuracy == 1.0


def test_aggregate_permutation_invariant(instances_2020):
    import random
    subset = instances_2020[:50]
    records = [ResponseRecord(i.id, i.gold_answer) for i in subset]
    verdicts = judge_all(subset, records)
    shuffled = verdicts[:]
    random.Random(0).shuffle(shuffled)
    a = aggregate(verdicts, subset).to_dict()
    b = aggregate(shuffled, subset).to_dict()
    assert a == b


def test_aggregate_rejects_unmatched_verdict(instances_2020):
    subset = instances_2020[:3]
    records = [ResponseRecord(i.id, i.gold_answer) for i in subset]
    verdicts = judge_all(subset, records)
    verdicts[0].instance_id = "not-a-real-id"
    with pytest.raises(UnmatchedVerdict):
        aggregate(verdicts, subset)


def test_aggregate_significance_pairings(instances_2020):
    subset = instances_2020[:400]
    records = [ResponseRecord(i.id, i.gold_answer) for i in subset]
    verdicts = judge_all(subset, records)
    report = aggregate(verdicts, subset, with_significance=True,
                       bootstrap_iterations=200)
    assert set(report.significance) <= {
        "festival_vs_date", "polar_vs_content",
        "gregorian_to_others_vs_reverse"}
    for cell in report.significance.values():
        assert cell["iterations"] == 200


def test_token_usage_mean(instances_2020):
    subset = instances_2020[:5]
    records = [ResponseRecord(i.id, i.gold_answer,
                              usage={"completion_tokens": 10 + k})
               for k, i in enumerate(subset)]
    verdicts = judge_all(subset, records)
    report = aggregate(verdicts, subset, records)
    assert report.response_tokens_mean == 12.0


def test_full_mock_gold_run_scores_one(instances_2020):
    records = run_model(GoldResponder(), instances_2020)
    verdicts = judge_all(instances_2020, records, JudgeKind.LOCAL)
    report = aggregate(verdicts, instances_2020)
    assert report.overall.accuracy == 1.0
