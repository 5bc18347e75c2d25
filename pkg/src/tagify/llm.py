"""Chat-completion providers.

Two implementations of the same narrow interface: a remote client
speaking the OpenAI-compatible chat-completions wire protocol against any
configured base URL, and a deterministic offline provider used for
hermetic tests and network-free operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol

import httpx

from ._http import post_json_with_retries
from .errors import EmptyCompletionError
from .prompt import ChatExchange

DEFAULT_MODEL_ALLOWLIST = ("gpt-3.5-turbo", "gpt-4")

_COUNT_IN_PROMPT = re.compile(r"Output (\d+) tags")


def model_allowlist_detail(allowlist: tuple[str, ...]) -> str:
    """Human-readable rule for the model allowlist, e.g.
    ``Model must be gpt-3.5-turbo or gpt-4``."""
    return "Model must be " + " or ".join(allowlist)


@dataclass(frozen=True)
class ProviderConfig:
    """Connection settings for a remote provider instance."""

    base_url: str
    api_key: str = ""
    timeout: float = 60.0
    max_retries: int = 2
    temperature: float = 0.0
    backoff: float = 0.25

    def __post_init__(self) -> None:
        if self.timeout <= 0:
            raise ValueError(f"timeout must be positive, got {self.timeout}")
        if self.max_retries < 0:
            raise ValueError(f"max_retries must be >= 0, got {self.max_retries}")


class ChatProvider(Protocol):
    def complete(self, exchange: ChatExchange, model: str) -> str:
        """Return the assistant reply for a system+user exchange."""
        ...


class OfflineChatProvider:
    """Deterministic stand-in for the remote model.

    Derives the reply purely from the exchange: it reads the requested
    tag count out of the system message, tokenizes the header row of the
    user message, and emits the first ``count`` header cells lowercased
    and comma-joined. When the header has fewer cells than ``count`` it
    cycles through them again with a ``-2``, ``-3``, ... suffix per pass,
    so the output length always matches the request.

    ``calls`` counts invocations so tests can assert that no provider
    call happens for requests that fail validation.
    """

    def __init__(self) -> None:
        self.calls = 0

    def complete(self, exchange: ChatExchange, model: str) -> str:
        self.calls += 1
        match = _COUNT_IN_PROMPT.search(exchange.system_message)
        if match is None:
            raise ValueError("system message does not state a tag count")
        count = int(match.group(1))

        header_line = exchange.user_message.split("\n", 1)[0]
        cells = [cell.strip().lower() for cell in header_line.split(",")]
        tags = []
        for i in range(count):
            base = cells[i % len(cells)]
            cycle = i // len(cells) + 1
            tags.append(base if cycle == 1 else f"{base}-{cycle}")
        return ",".join(tags)


class OpenAIChatClient:
    """Remote client for any OpenAI-compatible chat-completions endpoint.

    An instance holds only immutable config plus a connection pool and is
    safe to share across concurrent requests.
    """

    def __init__(self, config: ProviderConfig):
        self._config = config
        self._base_url = config.base_url.rstrip("/")
        self._client = httpx.Client(timeout=config.timeout)

    def complete(self, exchange: ChatExchange, model: str) -> str:
        payload = {
            "model": model,
            "temperature": self._config.temperature,
            "messages": [
                {"role": "system", "content": exchange.system_message},
                {"role": "user", "content": exchange.user_message},
            ],
        }
        headers = {"Authorization": f"Bearer {self._config.api_key}"}
        response = post_json_with_retries(
            self._client,
            f"{self._base_url}/chat/completions",
            payload,
            headers,
            max_retries=self._config.max_retries,
            backoff=self._config.backoff,
        )
        return _extract_reply(response)

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "OpenAIChatClient":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def _extract_reply(response: httpx.Response) -> str:
    try:
        body = response.json()
    except ValueError as exc:
        raise EmptyCompletionError(f"completion payload is not JSON: {exc}") from exc
    choices = body.get("choices") if isinstance(body, dict) else None
    if not choices:
        raise EmptyCompletionError("completion carried no choices")
    message = choices[0].get("message") or {}
    content = message.get("content")
    if not content:
        raise EmptyCompletionError("completion content is empty")
    return content
