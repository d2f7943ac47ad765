from enum import Enum
import logging
import os

from chaoslink.utilities import get_hostname, get_user

__all__ = ["LoggingLevel", "configure_logging", "generate_logfile_path", "set_log_levels"]

MAX_CONSOLE = 2
MIN_FILE = 3
MAX_FILE = 5

CONSOLE_FORMAT = "%(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

class LoggingLevel(Enum):
    """Levels between the standard ones used by the cipher, modem and dynamics loops.
    """
    # Between DEBUG and INFO
    WORDY = 15
    # Below DEBUG: per-round and per-point detail, then per-block chatter
    EXTENSIVE = 5
    TRACE = 2


DETAIL_LEVEL = {
    0: logging.ERROR,
    1: logging.INFO,
    2: LoggingLevel.WORDY.value,
    3: logging.DEBUG,
    4: LoggingLevel.EXTENSIVE.value,
    5: LoggingLevel.TRACE.value
}

def configure_logging(console_detail, file_detail, log_file=None):
    """Attach the console handler and, when a log file is given, the file handler to the root logger.

    Handlers left by an earlier call are removed first.

    Parameters
    ----------
    console_detail : int
        The requested detail level for the console logger.
    file_detail : int
        The requested detail level for the file logger.
    log_file : str, optional
        The file to log into. No file logging happens when not given.
    """
    for level in LoggingLevel:
        logging.addLevelName(level.value, level.name)

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()

    main_level = console_detail if log_file is None else max(console_detail, file_detail)
    root.setLevel(DETAIL_LEVEL[main_level])
    logging.captureWarnings(True)

    ch = logging.StreamHandler()
    ch.setLevel(DETAIL_LEVEL[console_detail])
    ch.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    root.addHandler(ch)

    if log_file is not None:
        fh = logging.FileHandler(log_file, mode='w')
        fh.setLevel(DETAIL_LEVEL[file_detail])
        fh.setFormatter(logging.Formatter(FILE_FORMAT))
        root.addHandler(fh)

def set_log_levels(verbose=0):
    """Split a -v count into console and file detail levels.

    The console stops at WORDY while the file starts at DEBUG and stops at TRACE. Both values
    are keys of DETAIL_LEVEL.

    Parameters
    ----------
    verbose : int
        The requested verbosity level.

    Returns
    -------
    (int, int)
        A tuple containing the console detail level and the file detail level respectively.
    """
    console_detail = min(verbose, MAX_CONSOLE)
    file_detail = min(max(verbose, MIN_FILE), MAX_FILE)
    return (console_detail, file_detail)

def generate_logfile_path(log_file_path="log", command="run"):
    """Name the log file of a run after the host, the user and the command.

    Parameters
    ----------
    log_file_path : str, optional
        The location to write the log file. The current directory is used if it does not exist.
    command : str, optional
        The pipeline command being run.

    Returns
    -------
    str
        The full path of the log file.
    """
    if not os.path.exists(log_file_path):
        log_file_path = ""
    log_file = os.path.join(log_file_path, "{}_{}_{}.log".format(get_hostname(), get_user(), command))
    return log_file
