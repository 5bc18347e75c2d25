"""Build the chat messages sent to the model and parse its reply.

The system prompt is a fixed instruction template with the requested tag
count substituted in two places; the user message is the sampled rows
serialized back to comma-separated lines. Both constructions are
deterministic: identical inputs yield byte-identical messages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import UnparseableReplyError
from .sampler import DatasetSample

SYSTEM_PROMPT_TEMPLATE = (
    "You will generate tags for a dataset. I will provide you the first rows "
    "of the dataset, whereas the very first row will be the column titles of the dataset. "
    "The first row will be in the following form: title1,title2,title3,etc... "
    "The next rows will be in the following form: value1,value2,value3,etc... "
    "Output {count} tags that describe the dataset best. Output only the "
    "suitable tags in the form of: tag1,tag2,tag3,etc... Tags should be in English. "
    "Try to make the tags general but relevant. Output only {count} tags."
)

# A comma with at most one optional whitespace character on each side.
_TAG_SEPARATOR = re.compile(r"\s?,\s?")


@dataclass
class ChatExchange:
    """Ordered system/user messages plus the raw model reply, once known."""

    system_message: str
    user_message: str
    raw_reply: str | None = None


def build_system_prompt(count: int) -> str:
    """Render the instruction template for ``count`` tags.

    Callers are expected to have validated ``count`` (3..10) already.
    """
    return SYSTEM_PROMPT_TEMPLATE.format(count=count)


def build_user_message(sample: DatasetSample) -> str:
    """Serialize the sample as comma-joined cells, one newline-terminated
    line per row."""
    return "".join(",".join(row) + "\n" for row in sample.rows)


def build_exchange(sample: DatasetSample, count: int) -> ChatExchange:
    return ChatExchange(
        system_message=build_system_prompt(count),
        user_message=build_user_message(sample),
    )


def parse_reply(raw_reply: str) -> list[str]:
    """Split a model reply into raw tag strings.

    Splits on commas tolerating a single flanking whitespace character,
    then trims residual whitespace from each piece (models sometimes pad
    with double spaces) and drops empty pieces. Newlines inside a piece
    are preserved here; downstream sanitation treats them as
    tag-invalidating.

    Raises:
        UnparseableReplyError: no non-empty pieces remain.
    """
    pieces = [piece.strip() for piece in _TAG_SEPARATOR.split(raw_reply)]
    tags = [piece for piece in pieces if piece]
    if not tags:
        raise UnparseableReplyError("reply contains no usable tags")
    return tags
