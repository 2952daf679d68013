import configparser
import logging
import os
from collections.abc import Iterable
from pathlib import Path
from typing import Final, TypeVar

import numpy as np
from dotenv import load_dotenv
from pydantic import ValidationError

import diagram_lemmas.data_types as data_types

T = TypeVar("T")

SECTION_NAME: Final = "engine configuration"
CFG_ENV_VAR: Final = "DIAGRAM_LEMMAS_CFG"
DEFAULT_CFG_FILE: Final = Path("diagram_lemmas.cfg")

_log_levels = {
    "0": logging.DEBUG,
    "1": logging.DEBUG,
    "2": logging.INFO,
    "3": logging.WARNING,
    "4": logging.ERROR,
    "5": logging.CRITICAL,
}


def _resolve_cfg_file(file_name: str | Path | None) -> tuple[Path, bool]:
    if file_name is not None:
        return Path(file_name), True
    load_dotenv()
    from_env = os.environ.get(CFG_ENV_VAR)
    if from_env:
        return Path(from_env), True
    return DEFAULT_CFG_FILE, False


def read_config_file(file_name: str | Path | None = None) -> data_types.Engine_Cfg_File:
    """Read the engine configuration.

    The file comes from ``file_name``, else from the DIAGRAM_LEMMAS_CFG
    variable (a .env file is honoured), else from ./diagram_lemmas.cfg. Only
    the last one may be missing, in which case the defaults apply.
    """
    cfg_file, explicit = _resolve_cfg_file(file_name)
    if not cfg_file.exists():
        if explicit:
            raise RuntimeError(f"file {cfg_file} not found")
        logging.debug(f"No configuration file at {cfg_file}, using defaults")
        return data_types.Engine_Cfg_File()
    config = configparser.ConfigParser()
    config.read(cfg_file)
    if not config.has_section(SECTION_NAME):
        raise RuntimeError(f"section [{SECTION_NAME}] missing from {cfg_file}")

    cfg_file_content = {}
    for key, value in config.items(SECTION_NAME):
        if key == "log level":
            if value not in _log_levels:
                raise RuntimeError(f"invalid log level {value!r} in {cfg_file}")
            cfg_file_content["log_level"] = data_types.Log_Level(_log_levels[value])
        else:
            cfg_file_content[key.replace(" ", "_")] = value
    try:
        return data_types.Engine_Cfg_File(**cfg_file_content)
    except ValidationError as error:
        raise RuntimeError(f"invalid configuration in {cfg_file}: {error}") from error


def write_cfg_file(
    new_cfg: data_types.Engine_Cfg_File, file_name: str | Path = DEFAULT_CFG_FILE
) -> None:
    config = configparser.ConfigParser()
    config[SECTION_NAME] = new_cfg.to_cfg_format()
    with open(file_name, "w") as file:
        config.write(file)


def reservoir_sample(items: Iterable[T], k: int, rng: np.random.Generator) -> list[T]:
    """Uniform sample of at most ``k`` items from a stream of unknown length."""
    sample: list[T] = []
    for i, item in enumerate(items):
        if i < k:
            sample.append(item)
            continue
        j = int(rng.integers(0, i + 1))
        if j < k:
            sample[j] = item
    return sample
