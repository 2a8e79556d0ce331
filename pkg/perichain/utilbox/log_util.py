"""
    Author: perichain contributors
    Date: 2026.10
"""

import logging
import os
import sys
import time

import humanfriendly


def logger_stdout_file(log_path: str = None, file_name: str = None, console: bool = False,
                       name_candidate: int = 1000) -> logging.Logger:
    """
    Builds the logger of one run.

    Args:
        log_path: str
            The folder of the log file. No file is written if it is None.
        file_name: str
            The stem of the log file. If 'name.log' exists, 'name1.log', 'name2.log', ... are tried in turn.
        console: bool
            Whether the messages are also shown on stdout.
        name_candidate: int
            The number of candidate file names.

    Returns:
        A logger with a unique name, so that consecutive runs in one process do not share handlers.

    """
    # time.time() makes sure that we always get a unique logger
    rootLogger = logging.getLogger(str(time.time()))
    rootLogger.setLevel(logging.INFO)
    rootLogger.propagate = False
    logFormatter = logging.Formatter("[ %(asctime)s | %(levelname)s ] %(message)s", "%d/%m/%Y %H:%M:%S")

    if log_path is not None and file_name is not None:
        os.makedirs(log_path, exist_ok=True)
        result_log = None
        for i in range(name_candidate):
            result_log = os.path.join(log_path, f"{file_name}.log" if i == 0 else f"{file_name}{i}.log")
            if not os.path.exists(result_log):
                break
        fileHandler = logging.FileHandler(result_log)
        fileHandler.setFormatter(logFormatter)
        rootLogger.addHandler(fileHandler)

    if console:
        consoleHandler = logging.StreamHandler(sys.stdout)
        consoleHandler.setFormatter(logFormatter)
        rootLogger.addHandler(consoleHandler)

    return rootLogger


def has_console(logger: logging.Logger) -> bool:
    """True iff some handler of the logger writes to a terminal; tqdm bars are only shown then."""
    return any(
        isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler) for h in logger.handlers
    )


def elapsed_summary(step_times: dict) -> str:
    """{'step': seconds} -> one line per step with a human-readable duration."""
    return "\n".join(f"    {step}: {humanfriendly.format_timespan(seconds)}" for step, seconds in step_times.items())
