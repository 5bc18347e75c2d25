"""Extract the first rows of a delimited text file.

The sample (header row plus up to nine data rows) is the only part of a
dataset ever shown to the language model, so parsing stops as soon as the
row cap is reached: input is consumed in fixed-size chunks and no further
chunk is requested once the cap is hit, keeping the cost of sampling a
multi-gigabyte file bounded by the sampled region plus one read buffer.

Parsing is standards-compliant delimited parsing rather than a naive
split: quoted cells may contain the delimiter, escaped quotes ("") and
embedded newlines, which real portal CSVs do contain. For inputs with no
quote characters the result equals a plain split on delimiter and line
breaks.
"""

from __future__ import annotations

import codecs
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Union

from .errors import DecodeError, EmptyFileError, MalformedQuotingError

MAX_SAMPLE_ROWS = 10

_CHUNK_SIZE = 8192
_QUOTE = '"'

Content = Union[str, bytes, bytearray, IO[str], IO[bytes]]


@dataclass(frozen=True)
class DatasetSample:
    """Header row plus up to nine data rows extracted from a tabular file.

    ``rows[0]`` is always the file's first physical record and is treated
    as the header row downstream. No row is an empty list, though cells
    may be empty strings.
    """

    rows: list[list[str]]
    source_name: str = "<memory>"
    delimiter: str = ","

    def __post_init__(self) -> None:
        if not 1 <= len(self.rows) <= MAX_SAMPLE_ROWS:
            raise ValueError(
                f"sample must hold 1..{MAX_SAMPLE_ROWS} rows, got {len(self.rows)}"
            )
        if any(not row for row in self.rows):
            raise ValueError("sample rows must not be empty lists")
        _check_delimiter(self.delimiter)

    @property
    def header(self) -> list[str]:
        return self.rows[0]


def _check_delimiter(delimiter: str) -> None:
    if len(delimiter) != 1 or delimiter in '"\r\n':
        raise ValueError(f"delimiter must be a single character, got {delimiter!r}")


def sample_csv(
    content: Content,
    delimiter: str = ",",
    max_rows: int = MAX_SAMPLE_ROWS,
    *,
    source_name: str | None = None,
) -> DatasetSample:
    """Parse the first ``max_rows`` records of ``content``.

    ``content`` may be text, bytes, or an open text/binary file object.
    Both ``\\n`` and ``\\r\\n`` record terminators are accepted; a UTF-8
    BOM is stripped. Trailing blank records within the sampled slice are
    dropped.

    Raises:
        EmptyFileError: zero records remain after trimming.
        DecodeError: the bytes are not valid UTF-8.
        MalformedQuotingError: a quote opened in the sampled region never
            closes.
        ValueError: bad ``delimiter`` or ``max_rows`` < 1.
    """
    _check_delimiter(delimiter)
    if max_rows < 1:
        raise ValueError(f"max_rows must be >= 1, got {max_rows}")

    name = source_name if source_name is not None else _default_name(content)
    chunks = _strip_bom(_text_chunks(content))
    try:
        records = _parse_records(chunks, delimiter, max_rows)
    except UnicodeDecodeError as exc:  # text-mode streams decode during read()
        raise DecodeError(f"{name}: input is not valid UTF-8: {exc}") from exc

    # A record holding a single empty cell is a blank line; drop them from
    # the tail of the slice only.
    while records and records[-1] == [""]:
        records.pop()
    if not records:
        raise EmptyFileError(f"{name}: no records found")

    return DatasetSample(rows=records, source_name=name, delimiter=delimiter)


def _default_name(content: Content) -> str:
    name = getattr(content, "name", None)
    return str(name) if isinstance(name, str) else "<memory>"


def _text_chunks(content: Content) -> Iterator[str]:
    """Normalize supported input kinds to an iterator of text chunks."""
    if isinstance(content, str):
        yield content
        return
    if isinstance(content, (bytes, bytearray)):
        yield _decode_all(bytes(content))
        return

    read = getattr(content, "read", None)
    if read is None:
        raise TypeError(f"unsupported content type: {type(content).__name__}")

    first = read(_CHUNK_SIZE)
    if isinstance(first, str):
        chunk = first
        while chunk:
            yield chunk
            chunk = read(_CHUNK_SIZE)
        return

    decoder = codecs.getincrementaldecoder("utf-8")()
    chunk = first
    try:
        while chunk:
            yield decoder.decode(chunk)
            chunk = read(_CHUNK_SIZE)
        yield decoder.decode(b"", final=True)
    except UnicodeDecodeError as exc:
        raise DecodeError(f"input is not valid UTF-8: {exc}") from exc


def _decode_all(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"input is not valid UTF-8: {exc}") from exc


def _strip_bom(chunks: Iterable[str]) -> Iterator[str]:
    seen_first = False
    for chunk in chunks:
        if not seen_first and chunk:
            if chunk[0] == "﻿":
                chunk = chunk[1:]
            seen_first = True
        yield chunk


# Parser states.
_START_FIELD = 0
_IN_FIELD = 1
_IN_QUOTED = 2
_QUOTE_IN_QUOTED = 3


def _parse_records(
    chunks: Iterable[str], delimiter: str, max_records: int
) -> list[list[str]]:
    """Incremental delimited-record parser with an early stop.

    Emits at most ``max_records`` records and stops pulling chunks once
    the cap is reached. Mirrors the lenient handling of stray quotes used
    by common readers (text after a closing quote continues the field
    unquoted), but an unterminated quote raises instead of silently
    swallowing the rest of the file.
    """
    records: list[list[str]] = []
    record: list[str] = []
    field: list[str] = []
    state = _START_FIELD
    record_started = False
    skip_lf = False  # consumed '\r', a following '\n' belongs to it

    def end_field() -> None:
        nonlocal field
        record.append("".join(field))
        field = []

    def end_record() -> None:
        nonlocal record, record_started
        end_field()
        records.append(record)
        record = []
        record_started = False

    for chunk in chunks:
        for ch in chunk:
            if skip_lf:
                skip_lf = False
                if ch == "\n":
                    continue
            if state == _IN_QUOTED:
                if ch == _QUOTE:
                    state = _QUOTE_IN_QUOTED
                else:
                    field.append(ch)
                continue
            if state == _QUOTE_IN_QUOTED:
                if ch == _QUOTE:
                    field.append(_QUOTE)
                    state = _IN_QUOTED
                    continue
                state = _IN_FIELD
                # fall through: delimiter/terminator handled below, any
                # other character continues the field unquoted
            if ch == delimiter:
                end_field()
                state = _START_FIELD
                record_started = True
            elif ch == "\n" or ch == "\r":
                skip_lf = ch == "\r"
                end_record()
                state = _START_FIELD
                if len(records) >= max_records:
                    return records
            elif state == _START_FIELD:
                record_started = True
                if ch == _QUOTE:
                    state = _IN_QUOTED
                else:
                    field.append(ch)
                    state = _IN_FIELD
            else:
                field.append(ch)

    if state == _IN_QUOTED:
        raise MalformedQuotingError("unterminated quoted field in sampled region")
    if record_started or field or record:
        end_record()
    return records
