"""Shared HTTP plumbing for the remote provider clients."""

from __future__ import annotations

import time

import httpx

from .errors import (
    ProviderRejectedError,
    ProviderTimeoutError,
    ProviderUnavailableError,
)


def post_json_with_retries(
    client: httpx.Client,
    url: str,
    payload: dict,
    headers: dict[str, str],
    *,
    max_retries: int,
    backoff: float,
) -> httpx.Response:
    """POST ``payload`` as JSON, retrying transient failures.

    Network errors, timeouts and 5xx responses are retried with
    exponential backoff up to ``max_retries`` additional attempts. 4xx
    responses are never retried: they mean the request itself was
    rejected (bad auth, bad parameters, oversized input) and the upstream
    error body is attached for diagnosis.
    """
    last_error: Exception = ProviderUnavailableError(f"no attempt made against {url}")
    for attempt in range(max_retries + 1):
        try:
            response = client.post(url, json=payload, headers=headers)
        except httpx.TimeoutException as exc:
            last_error = ProviderTimeoutError(f"timed out calling {url}: {exc}")
        except httpx.HTTPError as exc:
            last_error = ProviderUnavailableError(f"request to {url} failed: {exc}")
        else:
            if response.status_code >= 500:
                last_error = ProviderUnavailableError(
                    f"{url} returned {response.status_code}: {response.text[:500]}"
                )
            elif response.status_code >= 400:
                raise ProviderRejectedError(
                    f"{url} returned {response.status_code}: {response.text[:500]}"
                )
            else:
                return response
        if attempt < max_retries:
            time.sleep(backoff * (2**attempt))
    raise last_error
