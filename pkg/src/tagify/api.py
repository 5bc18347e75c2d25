"""HTTP surface: one POST endpoint that tags an already-sampled matrix.

The route lives at "/" and accepts a JSON body ``{"data": [[...], ...]}``
plus ``count`` and ``model`` query parameters. Validation runs in a fixed
order with exact, stable detail strings so clients can match on them:

  1. row count          -> "Data length must be a maximum of 10 lines"
  2. count range        -> "Count must be between 3 and 10"
  3. model allowlist    -> "Model must be gpt-3.5-turbo or gpt-4"

Success responses carry ``{"data": {"english": [...], "estonian": [...],
"warnings": [...]}}``; ``estonian`` is empty when translation was
unavailable, with the reason in ``warnings``. Provider failures map to
502, an unusable model reply to 500. No provider is ever called for a
request that fails validation.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .config import AppConfig, build_providers
from .errors import ProviderError, TaggingFailedError
from .llm import ChatProvider, model_allowlist_detail
from .pipeline import (
    MAX_TAG_COUNT,
    MIN_TAG_COUNT,
    TagRequest,
    generate_tags,
)
from .sampler import MAX_SAMPLE_ROWS, DatasetSample
from .translate import Translator

MAX_BODY_BYTES = 1 << 20  # the 10-row cap bounds rows, not cell size

ROW_LIMIT_DETAIL = f"Data length must be a maximum of {MAX_SAMPLE_ROWS} lines"
COUNT_RANGE_DETAIL = f"Count must be between {MIN_TAG_COUNT} and {MAX_TAG_COUNT}"


class TagMatrix(BaseModel):
    """Request body: the first rows of a dataset, header row first."""

    data: list[list[str]]


def create_app(
    config: AppConfig | None = None,
    *,
    llm: ChatProvider | None = None,
    translator: Translator | None = None,
) -> FastAPI:
    """Build the service application.

    Providers default to whatever ``config.provider_mode`` dictates;
    tests inject instrumented ones directly.
    """
    config = config or AppConfig(provider_mode="offline")
    if llm is None or translator is None:
        default_llm, default_translator = build_providers(config)
        llm = llm or default_llm
        translator = translator or default_translator

    app = FastAPI(title="tagify", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"] if config.cors_allow_all else [config.frontend_url],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def reject_oversized_bodies(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > MAX_BODY_BYTES:
            return JSONResponse(
                status_code=413,
                content={"detail": f"Request body must not exceed {MAX_BODY_BYTES} bytes"},
            )
        return await call_next(request)

    @app.post("/")
    def tag_matrix(
        body: TagMatrix,
        count: int = 5,
        model: str = "gpt-3.5-turbo",
    ) -> dict:
        if len(body.data) > MAX_SAMPLE_ROWS:
            raise HTTPException(status_code=400, detail=ROW_LIMIT_DETAIL)
        if not MIN_TAG_COUNT <= count <= MAX_TAG_COUNT:
            raise HTTPException(status_code=400, detail=COUNT_RANGE_DETAIL)
        if model not in config.model_allowlist:
            raise HTTPException(
                status_code=400, detail=model_allowlist_detail(config.model_allowlist)
            )
        if not body.data or any(not row for row in body.data):
            # Structurally unusable rather than rule-breaking: there is no
            # header row (or a row with zero cells) to sample from.
            raise HTTPException(
                status_code=422,
                detail="data must contain 1 to 10 non-empty rows",
            )

        sample = DatasetSample(
            rows=[list(row) for row in body.data],
            source_name="request",
            delimiter=",",
        )
        request = TagRequest(sample=sample, count=count, model=model)
        try:
            tag_set = generate_tags(request, llm, translator)
        except TaggingFailedError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc
        except ProviderError as exc:
            raise HTTPException(status_code=502, detail=str(exc)) from exc

        return {
            "data": {
                "english": tag_set.english,
                "estonian": tag_set.translated,
                "warnings": tag_set.warnings,
            }
        }

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    return app
