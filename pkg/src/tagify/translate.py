"""Translate tag lists between languages via a pluggable service.

Ships a remote client for DeepL-compatible endpoints and an identity
provider for tests and offline operation. Translators always return a
list of the same length and order as their input; anything else is a
provider fault.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol, Sequence

import httpx

from ._http import post_json_with_retries
from .errors import LengthMismatchError, ProviderUnavailableError
from .llm import ProviderConfig

ISO_639_1 = re.compile(r"[a-z]{2}")


@dataclass(frozen=True)
class LanguagePair:
    """Source and destination ISO 639-1 codes."""

    src: str = "en"
    dest: str = "et"

    def __post_init__(self) -> None:
        for code in (self.src, self.dest):
            if not ISO_639_1.fullmatch(code):
                raise ValueError(
                    f"language code must be two lowercase letters, got {code!r}"
                )


class Translator(Protocol):
    def translate_all(self, tags: Sequence[str], pair: LanguagePair) -> list[str]:
        """Translate every string, preserving count and order."""
        ...


def _check_input(tags: Sequence[str]) -> None:
    if not tags:
        raise ValueError("tags must be non-empty")
    if any(not tag for tag in tags):
        raise ValueError("tags must not contain empty strings")


class IdentityTranslator:
    """Returns its input unchanged; used offline and in tests."""

    def translate_all(self, tags: Sequence[str], pair: LanguagePair) -> list[str]:
        _check_input(tags)
        return list(tags)


class DeepLTranslator:
    """Remote client for DeepL-compatible batch translation endpoints.

    All tags go out in a single request; the service accepts an array of
    texts, so per-tag round trips are unnecessary. Shareable across
    concurrent requests like the chat client.
    """

    def __init__(self, config: ProviderConfig):
        self._config = config
        self._base_url = config.base_url.rstrip("/")
        self._client = httpx.Client(timeout=config.timeout)

    def translate_all(self, tags: Sequence[str], pair: LanguagePair) -> list[str]:
        _check_input(tags)
        payload = {
            "text": list(tags),
            "source_lang": pair.src.upper(),
            "target_lang": pair.dest.upper(),
        }
        headers = {"Authorization": f"DeepL-Auth-Key {self._config.api_key}"}
        response = post_json_with_retries(
            self._client,
            f"{self._base_url}/v2/translate",
            payload,
            headers,
            max_retries=self._config.max_retries,
            backoff=self._config.backoff,
        )
        return _extract_translations(response, expected=len(tags))

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "DeepLTranslator":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def _extract_translations(response: httpx.Response, expected: int) -> list[str]:
    try:
        body = response.json()
    except ValueError as exc:
        raise ProviderUnavailableError(
            f"translation payload is not JSON: {exc}"
        ) from exc
    translations = body.get("translations") if isinstance(body, dict) else None
    if not isinstance(translations, list):
        raise ProviderUnavailableError("translation payload lacks 'translations'")
    texts = [str(item.get("text", "")) for item in translations]
    if len(texts) != expected:
        raise LengthMismatchError(
            f"sent {expected} strings, provider returned {len(texts)}"
        )
    return texts
