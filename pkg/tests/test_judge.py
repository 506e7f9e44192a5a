from __future__ import annotations

import pytest

from crosscal.harness.judge import (
    JudgeKind,
    JudgeVerdict,
    judge,
    normalize_answer,
)


# ---------------------------------------------------------------------------
# normalization

@pytest.mark.parametrize("text,expected", [
    ("Yes", ("yesno", True)),
    ("yes.", ("yesno", True)),
    ('"No."', ("yesno", False)),
    ("2020-07-05", ("date", (2020, 7, 5, False))),
    ("2020-7-5", ("date", (2020, 7, 5, False))),
    ("July 5, 2020", ("date", (2020, 7, 5, False))),
    ("22 Muharram, 1483", ("date", (1483, 1, 22, False))),
    ("22 Muharram 1483", ("date", (1483, 1, 22, False))),
    ("1 Tammuz 5725", ("date", (5725, 4, 1, False))),
    ("14 Teveth, 5710", ("date", (5710, 10, 14, False))),
    ("13 Pausha, 1871", ("date", (1871, 10, 13, False))),
    ("13 Dey, 1328", ("date", (1328, 10, 13, False))),
    ("Month 4 Day 25, 2024", ("date", (2024, 4, 25, False))),
    ("Month 4 Day 15, 2020 (leap)", ("date", (2020, 4, 15, True))),
    ("2020-04L-15", ("date", (2020, 4, 15, True))),
    ("12 Adar (Adar I), 5710", ("date", (5710, 12, 12, False))),
    ("12 Adar 5710", ("date", (5710, 12, 12, False))),
    ("3 Adar II 5711", ("date", (5711, 13, 3, False))),
    ("4 Rabi' al-Thani (Rabi' al-Akhir), 1445",
     ("date", (1445, 4, 4, False))),
    ("4 Rabi' al-Akhir 1445", ("date", (1445, 4, 4, False))),
])
def test_normalize_answer(text, expected):
    assert normalize_answer(text) == expected


def test_normalize_falls_back_to_text():
    kind, value = normalize_answer("sometime next week")
    assert kind == "text"
    assert value == "sometime next week"


# ---------------------------------------------------------------------------
# local judge

def test_exact_yes():
    v = judge("q", "Yes", "Yes")
    assert v.accuracy == 1
    assert v.judge_kind is JudgeKind.LOCAL


def test_format_differences_disregarded():
    assert judge("q", "2020-07-05", "July 5, 2020").accuracy == 1
    assert judge("q", "July 5, 2020", "2020-07-05").accuracy == 1
    assert judge("q", "22 Muharram 1483", "22 Muharram, 1483").accuracy == 1
    assert judge("q", "1483-01-22", "22 Muharram, 1483").accuracy == 1


def test_wrong_day_scored_zero():
    assert judge("q", "21 Muharram, 1483", "22 Muharram, 1483").accuracy == 0
    assert judge("q", "No", "Yes").accuracy == 0
    assert judge("q", "", "Yes").accuracy == 0


def test_leap_month_distinguished():
    assert judge("q", "Month 4 Day 15, 2020",
                 "Month 4 Day 15, 2020 (leap)").accuracy == 0
    assert judge("q", "2020-04L-15",
                 "Month 4 Day 15, 2020 (leap)").accuracy == 1


def test_judge_is_symmetric_under_render_styles():
    forms = ["1483-01-22", "1483-1-22", "22 Muharram, 1483",
             "22 Muharram 1483"]
    for a in forms:
        for b in forms:
            assert judge("q", a, b).accuracy == 1


def test_self_agreement_on_golds(instances_2020):
    for inst in instances_2020[::61]:
        assert judge(inst.question, inst.gold_answer,
                     inst.gold_answer).accuracy == 1


# ---------------------------------------------------------------------------
# llm judge parsing (scripted client)

class ScriptedClient:
    def __init__(self, reply):
        self.reply = reply
        self.prompts = []

    def complete(self, prompt):
        self.prompts.append(prompt)
        return self.reply


def test_llm_judge_parses_accuracy():
    client = ScriptedClient('```json\n{"accuracy": "1"}\n```')
    v = judge("q", "resp", "gold", JudgeKind.LLM, judge_client=client)
    assert v.accuracy == 1
    assert v.judge_kind is JudgeKind.LLM
    # the evaluation prompt and the tuple both reach the judge model
    assert "Text Evaluation Specialist" in client.prompts[0]
    assert "response: resp" in client.prompts[0]


def test_llm_judge_parses_bare_zero():
    client = ScriptedClient('{"accuracy": 0}')
    assert judge("q", "r", "g", JudgeKind.LLM, judge_client=client).accuracy == 0


def test_llm_judge_parse_failure_recorded_not_guessed():
    client = ScriptedClient("I think the answer is correct!")
    v = judge("q", "r", "g", JudgeKind.LLM, judge_client=client)
    assert v.accuracy == 0
    assert v.note and "judge_parse_failure" in v.note


def test_llm_judge_requires_client():
    with pytest.raises(ValueError):
        judge("q", "r", "g", JudgeKind.LLM)


def test_verdict_shape():
    v = judge("q", "Yes", "Yes", instance_id="abc")
    assert isinstance(v, JudgeVerdict)
    assert v.instance_id == "abc"
    assert v.accuracy in (0, 1)
