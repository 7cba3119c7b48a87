import logging
import logging.config
import os
import sys
from importlib import resources

import yaml

__all__ = ["LOGGING_OVERRIDE_NAME", "excepthook", "configure_logging"]

LOGGING_OVERRIDE_NAME = "eo-strata-logging-config.yaml"


def excepthook(ex_type, value, tb):
    logging.getLogger(__name__).error("Uncaught exception:", exc_info=(ex_type, value, tb))


def load_logging_config(dirs):
    logging_path = os.path.join(dirs.user_config_dir, LOGGING_OVERRIDE_NAME)
    if os.path.isfile(logging_path):
        with open(logging_path, "rb") as f:
            return yaml.safe_load(f)
    # will only work if eo_strata.launcher has an __init__.py file
    return yaml.safe_load(resources.files("eo_strata.launcher").joinpath("logging.yaml").read_text(encoding="utf-8"))


def configure_logging(dirs, level=logging.WARNING):
    logging_config = load_logging_config(dirs)

    handlers = logging_config.get("handlers", {})
    if "file" in handlers and "filename" not in handlers["file"]:
        try:
            os.makedirs(dirs.user_data_dir, exist_ok=True)
            handlers["file"]["filename"] = os.path.join(dirs.user_data_dir, "eo-strata-log.txt")
        except OSError:
            # no writable data dir, e.g. in a sandbox
            handlers["file"] = {"class": "logging.NullHandler"}

    logging.config.dictConfig(logging_config)
    logging.root.setLevel(level)
    sys.excepthook = excepthook
