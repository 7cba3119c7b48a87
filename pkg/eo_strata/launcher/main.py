import logging
import sys

import appdirs

from eo_strata.catalog.golden import ClassificationUnavailable
from eo_strata.catalog.names import NameSemanticError, NameSyntaxError
from eo_strata.dieudonne.module import ModuleError
from eo_strata.launcher.cmd_util import get_environment, log_level, parse_args
from eo_strata.launcher.commands import cmd_convert, cmd_describe, cmd_enumerate, cmd_hasse, cmd_table
from eo_strata.launcher.log_utils import configure_logging
from eo_strata.launcher.verify import cmd_verify
from eo_strata.strata.core import GroupMismatchError, InvalidTypeError, LengthMismatchError
from eo_strata.strata.weyl import InvalidWeylElementError
from eo_strata.taut.ring import GradingError

log = logging.getLogger(__name__)

EXIT_OK, EXIT_VERIFICATION_FAILED, EXIT_USAGE, EXIT_INTERNAL_ERROR = 0, 1, 2, 3

COMMANDS = {
    "enumerate": cmd_enumerate,
    "describe": cmd_describe,
    "convert": cmd_convert,
    "table": cmd_table,
    "hasse": cmd_hasse,
    "verify": cmd_verify,
}

INPUT_ERRORS = (InvalidTypeError, LengthMismatchError, GroupMismatchError, InvalidWeylElementError, ModuleError,
                GradingError, NameSyntaxError, NameSemanticError, ClassificationUnavailable)


def main(argv=None) -> int:
    dirs = appdirs.AppDirs(appname="eo-strata", appauthor=False)  # disable author/company folder on windows
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # --help, --version and usage errors
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(dirs, log_level(args))
    log.info("Starting %s", get_environment())
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except INPUT_ERRORS as e:
        log.error("%s", e)
        return EXIT_USAGE
    except Exception:
        log.error("main() function quit exceptionally", exc_info=True)
        return EXIT_INTERNAL_ERROR
    finally:
        log.debug("Program terminated")


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
