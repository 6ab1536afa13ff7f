"""JSON codec of the versioned report dataclasses.

Reports serialize through ``dataclasses.asdict`` with enums as their values and load back with
``dacite`` in strict mode, so a report with unknown or missing fields is rejected.
"""

import json
from dataclasses import asdict
from enum import Enum
from typing import Any, TypeVar

from dacite import Config, from_dict

from vgpp_pricing.domain.errors import ConfigurationError

SCHEMA_VERSION = 1

R = TypeVar("R")

_DACITE_CONFIG = Config(type_hooks={float: float}, cast=[Enum], strict=True)


def _encode(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def report_to_json(report: Any) -> str:
    return json.dumps(asdict(report), default=_encode, indent=2) + "\n"


def report_from_dict(report_class: type[R], data: dict) -> R:
    """Build ``report_class`` from a decoded JSON object, checking its schema version."""
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ConfigurationError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION}")
    return from_dict(data_class=report_class, data=data, config=_DACITE_CONFIG)


def report_from_json(report_class: type[R], text: str) -> R:
    return report_from_dict(report_class, json.loads(text))
