"""Configuration loading: precedence, aliases, aggregate validation."""

from __future__ import annotations

import pytest

from tagify.config import AppConfig, build_providers, load_config
from tagify.errors import ConfigError
from tagify.llm import OfflineChatProvider, OpenAIChatClient
from tagify.translate import DeepLTranslator, IdentityTranslator


def test_offline_mode_needs_no_keys():
    config = load_config(environ={"TAGIFY_PROVIDER_MODE": "offline"})
    assert config.provider_mode == "offline"
    assert config.llm_api_key == ""


def test_remote_mode_missing_keys_lists_every_problem():
    with pytest.raises(ConfigError) as excinfo:
        load_config(environ={})
    message = str(excinfo.value)
    assert "TAGIFY_LLM_API_KEY" in message
    assert "TAGIFY_TRANSLATOR_API_KEY" in message
    assert len(excinfo.value.problems) == 2


def test_remote_mode_with_both_keys_is_valid():
    config = load_config(
        environ={"TAGIFY_LLM_API_KEY": "sk-1", "TAGIFY_TRANSLATOR_API_KEY": "dk-1"}
    )
    assert config.llm_api_key == "sk-1"
    assert config.translator_api_key == "dk-1"


def test_legacy_aliases_accepted():
    config = load_config(
        environ={
            "CHATGPT_API_KEY": "legacy-openai",
            "DEEPL_AUTH_KEY": "legacy-deepl",
            "FRONTEND_URL": "https://old.example",
        }
    )
    assert config.llm_api_key == "legacy-openai"
    assert config.translator_api_key == "legacy-deepl"
    assert config.frontend_url == "https://old.example"


def test_new_names_beat_legacy_aliases():
    config = load_config(
        environ={
            "TAGIFY_LLM_API_KEY": "new",
            "CHATGPT_API_KEY": "old",
            "TAGIFY_TRANSLATOR_API_KEY": "dk",
        }
    )
    assert config.llm_api_key == "new"


def test_overrides_beat_environment():
    config = load_config(
        environ={"TAGIFY_LISTEN_PORT": "9000", "TAGIFY_PROVIDER_MODE": "offline"},
        overrides={"listen_port": 7777},
    )
    assert config.listen_port == 7777


def test_defaults_apply_when_nothing_is_set():
    config = load_config(environ={"TAGIFY_PROVIDER_MODE": "offline"})
    assert config.listen_port == 8000
    assert config.llm_base_url == "https://api.openai.com/v1"
    assert config.translator_base_url == "https://api-free.deepl.com"
    assert config.portal_base_url == "https://avaandmed.eesti.ee"
    assert config.model_allowlist == ("gpt-3.5-turbo", "gpt-4")
    assert config.cors_allow_all is False


@pytest.mark.parametrize("port", ["0", "65536", "-1", "eight"])
def test_invalid_listen_port_rejected(port):
    with pytest.raises(ConfigError) as excinfo:
        load_config(
            environ={"TAGIFY_PROVIDER_MODE": "offline", "TAGIFY_LISTEN_PORT": port}
        )
    assert "TAGIFY_LISTEN_PORT" in str(excinfo.value)


def test_invalid_provider_mode_rejected():
    with pytest.raises(ConfigError):
        load_config(environ={"TAGIFY_PROVIDER_MODE": "cloud"})


def test_model_allowlist_parsed_from_env():
    config = load_config(
        environ={
            "TAGIFY_PROVIDER_MODE": "offline",
            "TAGIFY_MODEL_ALLOWLIST": "local-llama, gpt-4 ",
        }
    )
    assert config.model_allowlist == ("local-llama", "gpt-4")


def test_cors_flag_parsed_from_env():
    config = load_config(
        environ={"TAGIFY_PROVIDER_MODE": "offline", "TAGIFY_CORS_ALLOW_ALL": "true"}
    )
    assert config.cors_allow_all is True


def test_build_providers_offline():
    llm, translator = build_providers(AppConfig(provider_mode="offline"))
    assert isinstance(llm, OfflineChatProvider)
    assert isinstance(translator, IdentityTranslator)


def test_build_providers_remote():
    config = AppConfig(
        provider_mode="remote", llm_api_key="sk", translator_api_key="dk"
    )
    llm, translator = build_providers(config)
    assert isinstance(llm, OpenAIChatClient)
    assert isinstance(translator, DeepLTranslator)
    llm.close()
    translator.close()
