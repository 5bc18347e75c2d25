"""Application configuration from environment variables and overrides.

Precedence is total and documented: explicit override (CLI flag) > new
``TAGIFY_*`` environment variable > legacy alias environment variable >
built-in default. Legacy aliases (``CHATGPT_API_KEY``, ``DEEPL_AUTH_KEY``,
``FRONTEND_URL``) ease migration from older deployments.

Validation collects every problem before failing so a misconfigured
deployment reports all missing variables at once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from .errors import ConfigError
from .llm import (
    DEFAULT_MODEL_ALLOWLIST,
    OfflineChatProvider,
    OpenAIChatClient,
    ProviderConfig,
)
from .translate import DeepLTranslator, IdentityTranslator

ENV_PREFIX = "TAGIFY_"

# field name -> legacy environment variable accepted as an alias
LEGACY_ALIASES = {
    "llm_api_key": "CHATGPT_API_KEY",
    "translator_api_key": "DEEPL_AUTH_KEY",
    "frontend_url": "FRONTEND_URL",
}

PROVIDER_MODES = ("remote", "offline")

_TRUTHY = {"1", "true", "yes", "on"}
_FALSY = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class AppConfig:
    frontend_url: str = "http://localhost:3000"
    llm_api_key: str = ""
    llm_base_url: str = "https://api.openai.com/v1"
    translator_api_key: str = ""
    translator_base_url: str = "https://api-free.deepl.com"
    portal_base_url: str = "https://avaandmed.eesti.ee"
    listen_port: int = 8000
    provider_mode: str = "remote"
    model_allowlist: tuple[str, ...] = DEFAULT_MODEL_ALLOWLIST
    cors_allow_all: bool = False


def env_name(field: str) -> str:
    return ENV_PREFIX + field.upper()


def load_config(
    environ: Mapping[str, str] | None = None,
    overrides: Mapping[str, object] | None = None,
) -> AppConfig:
    """Assemble and validate an :class:`AppConfig`.

    ``overrides`` maps field names to values that beat the environment
    (CLI flags). Raises :class:`ConfigError` naming every missing or
    invalid entry.
    """
    environ = os.environ if environ is None else environ
    overrides = overrides or {}
    problems: list[str] = []

    def raw(fieldname: str) -> object | None:
        if fieldname in overrides and overrides[fieldname] is not None:
            return overrides[fieldname]
        value = environ.get(env_name(fieldname))
        if value is not None:
            return value
        alias = LEGACY_ALIASES.get(fieldname)
        if alias is not None:
            return environ.get(alias)
        return None

    defaults = AppConfig()

    def text(fieldname: str) -> str:
        value = raw(fieldname)
        return getattr(defaults, fieldname) if value is None else str(value)

    frontend_url = text("frontend_url")
    llm_api_key = text("llm_api_key")
    llm_base_url = text("llm_base_url")
    translator_api_key = text("translator_api_key")
    translator_base_url = text("translator_base_url")
    portal_base_url = text("portal_base_url")

    listen_port = defaults.listen_port
    port_raw = raw("listen_port")
    if port_raw is not None:
        try:
            listen_port = int(port_raw)
        except (TypeError, ValueError):
            problems.append(f"{env_name('listen_port')} must be an integer, got {port_raw!r}")
    if not 1 <= listen_port <= 65535:
        problems.append(f"{env_name('listen_port')} must be in 1..65535, got {listen_port}")
        listen_port = defaults.listen_port

    provider_mode = str(raw("provider_mode") or defaults.provider_mode).lower()
    if provider_mode not in PROVIDER_MODES:
        problems.append(
            f"{env_name('provider_mode')} must be one of {'/'.join(PROVIDER_MODES)},"
            f" got {provider_mode!r}"
        )

    allowlist_raw = raw("model_allowlist")
    if allowlist_raw is None:
        model_allowlist = defaults.model_allowlist
    elif isinstance(allowlist_raw, (tuple, list)):
        model_allowlist = tuple(str(m) for m in allowlist_raw)
    else:
        model_allowlist = tuple(
            m.strip() for m in str(allowlist_raw).split(",") if m.strip()
        )
    if not model_allowlist:
        problems.append(f"{env_name('model_allowlist')} must name at least one model")

    cors_raw = raw("cors_allow_all")
    if cors_raw is None:
        cors_allow_all = defaults.cors_allow_all
    elif isinstance(cors_raw, bool):
        cors_allow_all = cors_raw
    elif str(cors_raw).strip().lower() in _TRUTHY:
        cors_allow_all = True
    elif str(cors_raw).strip().lower() in _FALSY:
        cors_allow_all = False
    else:
        cors_allow_all = False
        problems.append(f"{env_name('cors_allow_all')} must be a boolean flag, got {cors_raw!r}")

    if provider_mode == "remote":
        # Offline mode needs no keys; remote needs both.
        if not llm_api_key:
            problems.append(
                f"{env_name('llm_api_key')} is not set"
                f" (legacy alias {LEGACY_ALIASES['llm_api_key']} also accepted)"
            )
        if not translator_api_key:
            problems.append(
                f"{env_name('translator_api_key')} is not set"
                f" (legacy alias {LEGACY_ALIASES['translator_api_key']} also accepted)"
            )

    if problems:
        raise ConfigError(problems)

    return AppConfig(
        frontend_url=frontend_url,
        llm_api_key=llm_api_key,
        llm_base_url=llm_base_url,
        translator_api_key=translator_api_key,
        translator_base_url=translator_base_url,
        portal_base_url=portal_base_url,
        listen_port=listen_port,
        provider_mode=provider_mode,
        model_allowlist=model_allowlist,
        cors_allow_all=cors_allow_all,
    )


def build_providers(config: AppConfig):
    """Instantiate the chat and translation providers for ``config``."""
    if config.provider_mode == "offline":
        return OfflineChatProvider(), IdentityTranslator()
    llm = OpenAIChatClient(
        ProviderConfig(base_url=config.llm_base_url, api_key=config.llm_api_key)
    )
    translator = DeepLTranslator(
        ProviderConfig(
            base_url=config.translator_base_url, api_key=config.translator_api_key
        )
    )
    return llm, translator
