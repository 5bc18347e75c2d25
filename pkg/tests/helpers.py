"""Test doubles and fixture-route builders shared across test modules."""

from __future__ import annotations

from tagify.errors import ProviderUnavailableError
from tagify.prompt import ChatExchange
from tagify.sampler import DatasetSample


class StaticChatProvider:
    """Chat provider returning one canned reply; counts invocations."""

    def __init__(self, reply: str):
        self.reply = reply
        self.calls = 0
        self.seen: list[tuple[ChatExchange, str]] = []

    def complete(self, exchange: ChatExchange, model: str) -> str:
        self.calls += 1
        self.seen.append((exchange, model))
        return self.reply


class FailingTranslator:
    """Translator stub that simulates a provider outage."""

    def __init__(self):
        self.calls = 0

    def translate_all(self, tags, pair):
        self.calls += 1
        raise ProviderUnavailableError("translator outage (simulated)")


class SwapCaseTranslator:
    """Deterministic non-identity translator: swaps character case."""

    def translate_all(self, tags, pair):
        if not tags:
            raise ValueError("tags must be non-empty")
        return [tag.swapcase() for tag in tags]


def make_sample(rows: list[list[str]], name: str = "fixture.csv") -> DatasetSample:
    return DatasetSample(rows=rows, source_name=name, delimiter=",")


def portal_routes(datasets: dict[str, dict], broken_ids: tuple[str, ...] = ()):
    """Route handler mimicking the portal catalog API shape.

    ``datasets`` maps id -> detail object (served under "data");
    ``broken_ids`` are listed in the catalog but 404 on detail fetch.
    """

    def handler(request):
        if request.path == "/api/datasets":
            limit = int(request.query.get("limit", ["0"])[0])
            ids = list(datasets) + list(broken_ids)
            return 200, {"data": [{"id": dataset_id} for dataset_id in ids[:limit]]}
        if request.path.startswith("/api/datasets/"):
            dataset_id = request.path.rsplit("/", 1)[1]
            if dataset_id in datasets:
                return 200, {"data": datasets[dataset_id]}
            return 404, {"error": f"{dataset_id} not found"}
        return 404, {"error": "unknown route"}

    return handler


def chat_routes(reply: str = "economy,health,transport"):
    """Route handler for an OpenAI-compatible chat completions endpoint."""

    def handler(request):
        if request.path == "/chat/completions":
            return 200, {"choices": [{"message": {"role": "assistant", "content": reply}}]}
        return 404, {"error": "unknown route"}

    return handler


def translate_routes(transform=lambda text: text):
    """Route handler for a DeepL-compatible batch translation endpoint."""

    def handler(request):
        if request.path == "/v2/translate":
            texts = request.body.get("text", []) if isinstance(request.body, dict) else []
            return 200, {"translations": [{"text": transform(t)} for t in texts]}
        return 404, {"error": "unknown route"}

    return handler
