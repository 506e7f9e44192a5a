"""Model clients: a chat-completion HTTP client plus deterministic mock
responders for offline runs.

Auth tokens are read from the environment only, never from flags or
code, so run configurations stay shareable.
"""

from __future__ import annotations

import hashlib
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Protocol, Sequence

import requests

from ..calendars import add_days
from ..errors import AuthError, MalformedResponse, Timeout
from ..templates import (
    EvalInstance,
    QuestionFormat,
    RenderStyle,
    evaluate_recipe,
    render_date,
)

DEFAULT_TASK_INSTRUCTION = (
    "Answer the question. Respond with only the final answer: a date, "
    'or "Yes"/"No" for yes-no questions.'
)

TOKEN_ENV_VAR = "CROSSCAL_API_TOKEN"


class Responder(Protocol):
    def respond(self, instance: EvalInstance) -> str: ...


@dataclass
class ResponseRecord:
    instance_id: str
    response: str
    error: str | None = None
    usage: dict | None = None


@dataclass
class ModelClient:
    """Chat-completion client with bounded retries and greedy decoding."""

    endpoint: str
    model: str
    token_env: str = TOKEN_ENV_VAR
    timeout: float = 60.0
    max_retries: int = 3
    temperature: float = 0.0
    max_tokens: int = 512
    task_instruction: str = DEFAULT_TASK_INSTRUCTION
    last_usage: dict | None = field(default=None, repr=False)

    def _headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        token = os.environ.get(self.token_env, "")
        if token:
            headers["Authorization"] = f"Bearer {token}"
        return headers

    def complete(self, prompt: str) -> str:
        """One chat completion; retries transient failures with backoff."""
        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
        }
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            try:
                resp = requests.post(self.endpoint, json=payload,
                                     headers=self._headers(),
                                     timeout=self.timeout)
            except requests.RequestException as exc:
                last_error = exc
            else:
                if resp.status_code in (401, 403):
                    raise AuthError(f"endpoint rejected credentials "
                                    f"({resp.status_code})")
                if resp.status_code >= 500 or resp.status_code == 429:
                    last_error = MalformedResponse(
                        f"status {resp.status_code}")
                else:
                    return self._parse(resp)
            if attempt < self.max_retries:
                time.sleep(min(2.0 ** attempt, 8.0))
        raise Timeout(f"no response after {self.max_retries} retries: "
                      f"{last_error}")

    def _parse(self, resp: requests.Response) -> str:
        try:
            body = resp.json()
            choices = body["choices"]
            content = choices[0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise MalformedResponse(f"unexpected payload: {exc}") from exc
        self.last_usage = body.get("usage")
        return content

    def respond(self, instance: EvalInstance) -> str:
        return self.complete(f"{self.task_instruction}\n\n{instance.question}")


@dataclass
class GoldResponder:
    """Scripted client that answers every instance with its gold answer."""

    def respond(self, instance: EvalInstance) -> str:
        return instance.gold_answer


@dataclass
class NoisyResponder:
    """Seeded client that corrupts a fixed fraction of answers.

    The decision is derived per instance id, so accuracy is stable
    across reruns and independent of instance order.
    """

    seed: int = 0
    wrong_rate: float = 0.3

    def _rng(self, instance_id: str) -> random.Random:
        digest = hashlib.sha1(f"{self.seed}:{instance_id}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))

    def respond(self, instance: EvalInstance) -> str:
        rng = self._rng(instance.id)
        if rng.random() >= self.wrong_rate:
            return instance.gold_answer
        if instance.template.question_format is QuestionFormat.POLAR:
            return "No" if instance.gold_answer == "Yes" else "Yes"
        result = evaluate_recipe(instance.recipe)
        wrong = add_days(result, rng.choice([1, 2, 3]))
        return render_date(wrong, RenderStyle.ANSWER)


def run_model(client: Responder, instances: Sequence[EvalInstance],
              concurrency: int = 1) -> list[ResponseRecord]:
    """One record per instance, in instance order.  Failed calls are
    recorded as empty responses with the error noted, never dropped."""

    def one(instance: EvalInstance) -> ResponseRecord:
        try:
            text = client.respond(instance)
        except (Timeout, MalformedResponse) as exc:
            return ResponseRecord(instance.id, "", error=str(exc))
        # best-effort under concurrency; usage attribution may interleave
        usage = getattr(client, "last_usage", None)
        return ResponseRecord(instance.id, text, usage=usage)

    if concurrency <= 1:
        return [one(inst) for inst in instances]
    with ThreadPoolExecutor(max_workers=concurrency) as pool:
        return list(pool.map(one, instances))
