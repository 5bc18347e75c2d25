"""tagify: LLM-assisted tag generation and tag-coverage auditing for
tabular open-data files."""

from .audit import (
    CoverageReport,
    TagHistogram,
    build_report,
    fetch_dataset,
    list_datasets,
    run_audit,
)
from .config import AppConfig, load_config
from .errors import TagifyError
from .llm import (
    DEFAULT_MODEL_ALLOWLIST,
    OfflineChatProvider,
    OpenAIChatClient,
    ProviderConfig,
)
from .pipeline import TagRequest, TagSet, generate_tags
from .prompt import ChatExchange, build_system_prompt, build_user_message, parse_reply
from .sampler import MAX_SAMPLE_ROWS, DatasetSample, sample_csv
from .translate import DeepLTranslator, IdentityTranslator, LanguagePair

__version__ = "0.1.0"

__all__ = [
    "AppConfig",
    "ChatExchange",
    "CoverageReport",
    "DEFAULT_MODEL_ALLOWLIST",
    "DatasetSample",
    "DeepLTranslator",
    "IdentityTranslator",
    "LanguagePair",
    "MAX_SAMPLE_ROWS",
    "OfflineChatProvider",
    "OpenAIChatClient",
    "ProviderConfig",
    "TagHistogram",
    "TagRequest",
    "TagSet",
    "TagifyError",
    "build_report",
    "build_system_prompt",
    "build_user_message",
    "fetch_dataset",
    "generate_tags",
    "list_datasets",
    "load_config",
    "parse_reply",
    "run_audit",
    "sample_csv",
    "__version__",
]
