"""Orchestrate sampling, prompting, completion, sanitation and translation.

The model does not reliably honor the requested tag count and
occasionally returns prose instead of a tag list, so the pipeline
enforces the contract after the fact: over-generation is truncated,
under-generation tolerated, and garbage dropped, each signaled through a
closed set of warning codes. Translation failures degrade to
English-only output rather than failing the request, because English
tags alone are still useful to a publisher.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ProviderError, TaggingFailedError, UnparseableReplyError
from .llm import ChatProvider, DEFAULT_MODEL_ALLOWLIST
from .prompt import build_exchange, parse_reply
from .sampler import DatasetSample
from .translate import ISO_639_1, LanguagePair, Translator

MAX_TAG_LENGTH = 64
MIN_TAG_COUNT = 3
MAX_TAG_COUNT = 10
DEFAULT_TAG_COUNT = 5

WARN_OVER_GENERATION = "over_generation_truncated"
WARN_UNDER_GENERATION = "under_generation"
WARN_TAGS_SANITIZED = "tags_sanitized"
WARN_TRANSLATION_UNAVAILABLE = "translation_unavailable"

WARNING_CODES = frozenset(
    {
        WARN_OVER_GENERATION,
        WARN_UNDER_GENERATION,
        WARN_TAGS_SANITIZED,
        WARN_TRANSLATION_UNAVAILABLE,
    }
)


@dataclass(frozen=True)
class TagRequest:
    """A sampled dataset plus the generation parameters."""

    sample: DatasetSample
    count: int = DEFAULT_TAG_COUNT
    model: str = DEFAULT_MODEL_ALLOWLIST[0]
    dest_lang: str = "et"

    def __post_init__(self) -> None:
        if not MIN_TAG_COUNT <= self.count <= MAX_TAG_COUNT:
            raise ValueError(
                f"count must be between {MIN_TAG_COUNT} and {MAX_TAG_COUNT},"
                f" got {self.count}"
            )
        if not ISO_639_1.fullmatch(self.dest_lang):
            raise ValueError(
                f"dest_lang must be two lowercase letters, got {self.dest_lang!r}"
            )


@dataclass(frozen=True)
class TagSet:
    """Final result: source-language tags, their translations, warnings.

    ``translated`` is either empty (translation unavailable) or exactly
    as long as ``english``. ``warnings`` only ever holds codes from
    ``WARNING_CODES``, in a stable order.
    """

    english: list[str]
    translated: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _clean_pieces(pieces: list[str]) -> tuple[list[str], bool]:
    """Drop garbage pieces and case-insensitive duplicates.

    A piece is garbage when it is empty after trimming, contains a line
    break (the model wrote prose, not a tag), or exceeds
    ``MAX_TAG_LENGTH`` characters. Returns the survivors in order plus a
    flag indicating whether any garbage was dropped; duplicate removal is
    silent since the shortfall, if any, is reported as under-generation.
    """
    kept: list[str] = []
    dropped_garbage = False
    for piece in pieces:
        tag = piece.strip()
        if not tag or "\n" in tag or "\r" in tag or len(tag) > MAX_TAG_LENGTH:
            dropped_garbage = True
            continue
        kept.append(tag)

    seen: set[str] = set()
    unique: list[str] = []
    for tag in kept:
        key = tag.lower()
        if key in seen:
            continue
        seen.add(key)
        unique.append(tag)
    return unique, dropped_garbage


def generate_tags(
    request: TagRequest, llm: ChatProvider, translator: Translator
) -> TagSet:
    """Run the full tagging flow for one request.

    Raises:
        TaggingFailedError: the reply had no usable tags after sanitation.
        ProviderError: the chat provider failed (translation provider
            failures degrade to a warning instead).
    """
    exchange = build_exchange(request.sample, request.count)
    raw_reply = llm.complete(exchange, request.model)
    exchange.raw_reply = raw_reply

    try:
        pieces = parse_reply(raw_reply)
    except UnparseableReplyError as exc:
        raise TaggingFailedError(f"model reply unusable: {exc}") from exc

    english, dropped_garbage = _clean_pieces(pieces)
    if not english:
        raise TaggingFailedError(
            "sanitation removed every tag; model returned incomprehensible output"
        )

    warnings: list[str] = []
    if dropped_garbage:
        warnings.append(WARN_TAGS_SANITIZED)
    if len(english) > request.count:
        english = english[: request.count]
        warnings.append(WARN_OVER_GENERATION)
    elif len(english) < request.count:
        warnings.append(WARN_UNDER_GENERATION)

    pair = LanguagePair(src="en", dest=request.dest_lang)
    try:
        translated = translator.translate_all(english, pair)
    except ProviderError:
        translated = []
        warnings.append(WARN_TRANSLATION_UNAVAILABLE)

    return TagSet(english=english, translated=translated, warnings=warnings)
