"""Application configuration: one TOML/JSON file plus environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Mapping

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from babelbot.engine.llm import ENV_ENDPOINT, ENV_KEY, ENV_MODEL
from babelbot.perception.types import PerceptionConfig

ENV_MAP = "BABELBOT_MAP"
ENV_DATA_DIR = "BABELBOT_DATA_DIR"
ENV_TOKEN = "BABELBOT_TOKEN"


@dataclass(frozen=True)
class AppConfig:
    llm_endpoint: str = ""
    llm_model: str = ""
    llm_key: str = ""
    use_mock: bool = True
    map_path: str = ""
    data_dir: str = "babelbot_data"
    bearer_token: str = ""
    default_language: str = "en"
    sim_dt: float = 0.05
    seed: int = 0
    perception: PerceptionConfig = field(default_factory=PerceptionConfig)

    @classmethod
    def load(
        cls, path: Path | str | None = None, env: Mapping[str, str] | None = None
    ) -> "AppConfig":
        env = env if env is not None else os.environ
        data: dict = {}
        if path:
            path = Path(path)
            raw = path.read_bytes()
            if path.suffix == ".json":
                data = json.loads(raw.decode("utf-8"))
            else:
                data = tomllib.loads(raw.decode("utf-8"))

        perception_kwargs = data.pop("perception", {})
        known = {f.name for f in fields(cls) if f.name != "perception"}
        cfg = cls(
            **{k: v for k, v in data.items() if k in known},
            perception=PerceptionConfig(**perception_kwargs),
        )

        overrides = {}
        if env.get(ENV_ENDPOINT):
            overrides["llm_endpoint"] = env[ENV_ENDPOINT]
            overrides["use_mock"] = False
        if env.get(ENV_MODEL):
            overrides["llm_model"] = env[ENV_MODEL]
        if env.get(ENV_KEY):
            overrides["llm_key"] = env[ENV_KEY]
        if env.get(ENV_MAP):
            overrides["map_path"] = env[ENV_MAP]
        if env.get(ENV_DATA_DIR):
            overrides["data_dir"] = env[ENV_DATA_DIR]
        if env.get(ENV_TOKEN):
            overrides["bearer_token"] = env[ENV_TOKEN]
        return replace(cfg, **overrides) if overrides else cfg
