"""Measure tag coverage across an open-data portal's catalog.

Walks the portal's dataset API (list endpoint, then one detail request
per dataset), tallies how many keywords each dataset carries, and
produces a histogram plus headline coverage percentages: the share of
datasets with zero tags and with exactly one tag. Per-dataset fetch
failures are recorded in the report instead of aborting the crawl, so a
flaky portal still yields a usable partial result.
"""

from __future__ import annotations

import csv
import json
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Iterable, Sequence

import httpx

from .errors import (
    DatasetFetchError,
    MalformedCatalogError,
    PortalUnavailableError,
)

DEFAULT_TIMEOUT = 30.0


@dataclass(frozen=True)
class TagHistogram:
    """Map from tag count to number of datasets carrying that many tags."""

    counts: dict[int, int]
    total: int
    fetched_at: str
    portal: str

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.total:
            raise ValueError("histogram buckets must sum to total")
        if any(k < 0 for k in self.counts):
            raise ValueError("tag counts cannot be negative")


@dataclass(frozen=True)
class CoverageReport:
    """Histogram plus headline percentages and the per-dataset error ledger.

    Headline percentages are integers rounded half-up; the exact values
    are retained alongside. Both are ``None`` when no dataset was
    fetched, never NaN.
    """

    histogram: TagHistogram
    pct_zero_tags: int | None
    pct_one_tag: int | None
    pct_zero_tags_exact: float | None
    pct_one_tag_exact: float | None
    errors_encountered: list[tuple[str, str]] = field(default_factory=list)


def _headline_pct(part: int, total: int) -> int:
    scaled = Decimal(part) * 100 / Decimal(total)
    return int(scaled.quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def list_datasets(
    portal: str, limit: int, *, client: httpx.Client | None = None
) -> list[dict]:
    """Fetch dataset summaries from ``{portal}/api/datasets?limit=N``.

    Raises:
        PortalUnavailableError: network failure or non-2xx status.
        MalformedCatalogError: response is not a ``{"data": [...]}``
            envelope.
    """
    url = f"{portal.rstrip('/')}/api/datasets"
    try:
        if client is None:
            with httpx.Client(timeout=DEFAULT_TIMEOUT) as one_shot:
                response = one_shot.get(url, params={"limit": limit})
        else:
            response = client.get(url, params={"limit": limit})
    except httpx.HTTPError as exc:
        raise PortalUnavailableError(f"cannot reach {url}: {exc}") from exc
    if response.status_code != 200:
        raise PortalUnavailableError(
            f"{url} returned {response.status_code}: {response.text[:200]}"
        )
    try:
        payload = response.json()
    except ValueError as exc:
        raise MalformedCatalogError(f"catalog response is not JSON: {exc}") from exc
    data = payload.get("data") if isinstance(payload, dict) else None
    if not isinstance(data, list):
        raise MalformedCatalogError("catalog response lacks a 'data' array")
    return data


def fetch_dataset(
    portal: str, dataset_id: str, *, client: httpx.Client | None = None
) -> dict:
    """Fetch one dataset detail; missing or null keywords become [].

    Raises:
        DatasetFetchError: any failure for this dataset (the audit
            records it and moves on).
    """
    if not dataset_id:
        raise DatasetFetchError("dataset id is empty")
    url = f"{portal.rstrip('/')}/api/datasets/{dataset_id}"
    try:
        if client is None:
            with httpx.Client(timeout=DEFAULT_TIMEOUT) as one_shot:
                response = one_shot.get(url)
        else:
            response = client.get(url)
    except httpx.HTTPError as exc:
        raise DatasetFetchError(f"cannot reach {url}: {exc}") from exc
    if response.status_code != 200:
        raise DatasetFetchError(f"{url} returned {response.status_code}")
    try:
        payload = response.json()
    except ValueError as exc:
        raise DatasetFetchError(f"detail response is not JSON: {exc}") from exc
    detail = payload.get("data") if isinstance(payload, dict) else None
    if not isinstance(detail, dict):
        raise DatasetFetchError("detail response lacks a 'data' object")

    keywords = detail.get("keywords")
    detail = dict(detail)
    detail["keywords"] = list(keywords) if isinstance(keywords, list) else []
    return detail


def build_report(
    details: Iterable[dict],
    *,
    portal: str,
    errors: Sequence[tuple[str, str]] = (),
    fetched_at: str | None = None,
) -> CoverageReport:
    """Tally keyword counts into a histogram and derive the percentages."""
    counts: Counter[int] = Counter()
    for detail in details:
        keywords = detail.get("keywords")
        counts[len(keywords) if isinstance(keywords, list) else 0] += 1
    total = sum(counts.values())

    histogram = TagHistogram(
        counts=dict(counts),
        total=total,
        fetched_at=fetched_at or datetime.now(timezone.utc).isoformat(),
        portal=portal,
    )
    if total == 0:
        return CoverageReport(histogram, None, None, None, None, list(errors))
    zero, one = counts.get(0, 0), counts.get(1, 0)
    return CoverageReport(
        histogram=histogram,
        pct_zero_tags=_headline_pct(zero, total),
        pct_one_tag=_headline_pct(one, total),
        pct_zero_tags_exact=100.0 * zero / total,
        pct_one_tag_exact=100.0 * one / total,
        errors_encountered=list(errors),
    )


def run_audit(
    portal: str,
    limit: int,
    *,
    max_in_flight: int = 1,
    delay: float = 0.0,
    client: httpx.Client | None = None,
) -> CoverageReport:
    """Crawl the portal and build a coverage report.

    Fetches sequentially by default with an optional politeness ``delay``
    between detail requests; ``max_in_flight`` > 1 enables bounded
    parallel fetching. The tally is order-independent, so parallel runs
    aggregate to the same report. Issues exactly one list request plus
    one detail request per summary.
    """
    own_client = client is None
    http = client or httpx.Client(timeout=DEFAULT_TIMEOUT)
    try:
        summaries = list_datasets(portal, limit, client=http)
        details: list[dict] = []
        errors: list[tuple[str, str]] = []

        def label(summary: dict) -> str:
            raw_id = summary.get("id")
            return str(raw_id) if raw_id not in (None, "") else "<missing id>"

        def grab(summary: dict) -> dict:
            raw_id = summary.get("id")
            dataset_id = str(raw_id) if raw_id is not None else ""
            return fetch_dataset(portal, dataset_id, client=http)

        if max_in_flight <= 1:
            for index, summary in enumerate(summaries):
                if delay and index:
                    time.sleep(delay)
                try:
                    details.append(grab(summary))
                except DatasetFetchError as exc:
                    errors.append((label(summary), str(exc)))
        else:
            with ThreadPoolExecutor(max_workers=max_in_flight) as pool:
                futures = [(summary, pool.submit(grab, summary)) for summary in summaries]
                for summary, future in futures:
                    try:
                        details.append(future.result())
                    except DatasetFetchError as exc:
                        errors.append((label(summary), str(exc)))

        return build_report(details, portal=portal, errors=errors)
    finally:
        if own_client:
            http.close()


def report_to_dict(report: CoverageReport) -> dict:
    """JSON-ready representation of a coverage report."""
    return {
        "portal": report.histogram.portal,
        "fetched_at": report.histogram.fetched_at,
        "total": report.histogram.total,
        "counts": {str(k): v for k, v in sorted(report.histogram.counts.items())},
        "pct_zero_tags": report.pct_zero_tags,
        "pct_one_tag": report.pct_one_tag,
        "pct_zero_tags_exact": report.pct_zero_tags_exact,
        "pct_one_tag_exact": report.pct_one_tag_exact,
        "errors_encountered": [
            {"id": dataset_id, "error": message}
            for dataset_id, message in report.errors_encountered
        ],
    }


def write_report_json(report: CoverageReport, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def write_histogram_csv(report: CoverageReport, path: str | Path) -> None:
    """Histogram as two-column CSV: tag_count, n_datasets."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["tag_count", "n_datasets"])
        for tag_count, n_datasets in sorted(report.histogram.counts.items()):
            writer.writerow([tag_count, n_datasets])
