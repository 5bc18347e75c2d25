"""Exception hierarchy shared across the tagify package.

Every error raised by tagify code derives from :class:`TagifyError` so
callers can catch the whole family with one clause. Provider-side faults
(LLM, translator) derive from :class:`ProviderError`.
"""

from __future__ import annotations


class TagifyError(Exception):
    """Base class for all tagify errors."""


# --- sampling ---------------------------------------------------------------


class EmptyFileError(TagifyError):
    """The input contained zero records after trailing-blank trimming."""


class DecodeError(TagifyError):
    """The input bytes are not valid UTF-8 text."""


class MalformedQuotingError(TagifyError):
    """A quoted field was never closed inside the sampled region."""


# --- prompting --------------------------------------------------------------


class UnparseableReplyError(TagifyError):
    """The model reply yielded zero non-empty tag pieces."""


# --- providers (LLM and translation) ----------------------------------------


class ProviderError(TagifyError):
    """Base class for remote provider faults."""


class ProviderUnavailableError(ProviderError):
    """Network failure or 5xx that persisted through all retries."""


class ProviderRejectedError(ProviderError):
    """The provider returned a 4xx response (includes auth failures)."""


class ProviderTimeoutError(ProviderError):
    """The provider did not answer within the configured timeout."""


class EmptyCompletionError(ProviderError):
    """The completion payload carried no choices or empty content."""


class LengthMismatchError(ProviderError):
    """The translator returned a different number of strings than sent."""


# --- pipeline ---------------------------------------------------------------


class TaggingFailedError(TagifyError):
    """Sanitation left zero usable tags (incomprehensible model output)."""


# --- portal audit -----------------------------------------------------------


class PortalUnavailableError(TagifyError):
    """The portal catalog endpoint could not be reached or errored."""


class MalformedCatalogError(TagifyError):
    """The catalog response was not the expected {"data": [...]} envelope."""


class DatasetFetchError(TagifyError):
    """A single dataset detail could not be fetched; recorded, not fatal."""


# --- configuration and CLI ---------------------------------------------------


class ConfigError(TagifyError):
    """Invalid or incomplete application configuration.

    Collects *all* problems found so operators see every missing variable
    at once instead of fixing them one by one.
    """

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class PortInUseError(TagifyError):
    """The requested listen port is already bound."""
