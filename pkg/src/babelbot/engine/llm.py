"""Chat-completion client: HTTP wire format, env config, and interpret().

Wire format: ``POST {"model", "messages", "temperature": 0, "max_tokens": 500}``
against a chat-completions endpoint; the reply must carry
``choices[0].message.content``. Endpoint, model name, and key come from a
config file or the ``BABELBOT_LLM_ENDPOINT`` / ``_MODEL`` / ``_KEY``
environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Protocol

import httpx

from babelbot.engine.parse import ACTION_LINE_RE
from babelbot.engine.types import (
    Instruction,
    Interpretation,
    LlmProtocolError,
    LlmTimeout,
    PromptBundle,
)

ENV_ENDPOINT = "BABELBOT_LLM_ENDPOINT"
ENV_MODEL = "BABELBOT_LLM_MODEL"
ENV_KEY = "BABELBOT_LLM_KEY"

DEFAULT_TIMEOUT_S = 30.0
TEMPERATURE = 0.0
MAX_TOKENS = 500


class LanguageModelClient(Protocol):
    def complete(
        self,
        messages: list[dict[str, str]],
        *,
        temperature: float = TEMPERATURE,
        max_tokens: int = MAX_TOKENS,
    ) -> str: ...


@dataclass(frozen=True)
class LlmSettings:
    endpoint: str
    model: str
    api_key: str = ""
    timeout_s: float = DEFAULT_TIMEOUT_S

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> "LlmSettings":
        env = env if env is not None else os.environ
        return cls(
            endpoint=env.get(ENV_ENDPOINT, ""),
            model=env.get(ENV_MODEL, ""),
            api_key=env.get(ENV_KEY, ""),
        )


class HttpLanguageModel:
    """Synchronous chat-completion client over HTTP."""

    def __init__(self, settings: LlmSettings, client: httpx.Client | None = None):
        if not settings.endpoint:
            raise ValueError("LLM endpoint is not configured")
        self.settings = settings
        self._client = client or httpx.Client(timeout=settings.timeout_s)

    def complete(
        self,
        messages: list[dict[str, str]],
        *,
        temperature: float = TEMPERATURE,
        max_tokens: int = MAX_TOKENS,
    ) -> str:
        payload = {
            "model": self.settings.model,
            "messages": messages,
            "temperature": temperature,
            "max_tokens": max_tokens,
        }
        headers = {}
        if self.settings.api_key:
            headers["Authorization"] = f"Bearer {self.settings.api_key}"
        try:
            response = self._client.post(self.settings.endpoint, json=payload, headers=headers)
        except httpx.TimeoutException as exc:
            raise LlmTimeout(f"no reply within {self.settings.timeout_s} s") from exc
        except httpx.HTTPError as exc:
            raise LlmTimeout(f"endpoint unreachable: {exc}") from exc

        if response.status_code != 200:
            raise LlmProtocolError(f"endpoint returned HTTP {response.status_code}")
        try:
            body = response.json()
            content = body["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise LlmProtocolError(f"malformed completion response: {exc}") from exc
        if not isinstance(content, str):
            raise LlmProtocolError("completion content is not a string")
        return content


def split_reply(raw_reply: str) -> tuple[str, tuple[str, ...]]:
    """Separate a completion into (summary text, action lines in order)."""
    plan_lines = []
    other_lines = []
    for line in raw_reply.splitlines():
        if ACTION_LINE_RE.match(line):
            plan_lines.append(line.strip())
        elif line.strip():
            other_lines.append(line.strip())
    return "\n".join(other_lines), tuple(plan_lines)


def interpret(
    instr: Instruction, prompt: PromptBundle, client: LanguageModelClient
) -> Interpretation:
    """Run one completion at temperature 0 and extract the plan lines."""
    messages = [
        {"role": "system", "content": prompt.system_text()},
        {"role": "user", "content": prompt.user_message or instr.text},
    ]
    raw = client.complete(messages, temperature=TEMPERATURE, max_tokens=MAX_TOKENS)
    summary, plan_lines = split_reply(raw)
    return Interpretation(raw_reply=raw, summary=summary, plan_lines=plan_lines)
