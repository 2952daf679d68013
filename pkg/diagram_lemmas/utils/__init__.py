from .utils import (
    CFG_ENV_VAR,
    DEFAULT_CFG_FILE,
    SECTION_NAME,
    read_config_file,
    reservoir_sample,
    write_cfg_file,
)
