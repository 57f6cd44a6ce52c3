import logging
from datetime import datetime
from pathlib import Path

from config import Constants


def _file_handler(name, log_level, formatter):
    Constants.LOG_DIRECTORY.mkdir(exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    handler = logging.FileHandler(Constants.LOG_DIRECTORY / f"{name}_{timestamp}.log", encoding="utf-8")
    handler.setLevel(log_level)
    handler.setFormatter(formatter)
    return handler


def setup_logger(name=Constants.LOGGER_NAME, log_level=logging.INFO, log_to_file=False):
    """
    Configure a logger with a console handler and, optionally, a timestamped file under logs/.

    Handlers from an earlier call are closed and replaced, so calling this again only
    changes the level and the targets.

    Args:
        name (str): The name of the logger
        log_level (int): The logging level (e.g., logging.DEBUG, logging.INFO)
        log_to_file (bool): Whether to log to a file in addition to the console

    Returns:
        logging.Logger: The configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    while logger.handlers:
        stale = logger.handlers[0]
        logger.removeHandler(stale)
        stale.close()

    formatter = logging.Formatter(Constants.LOG_FORMAT)
    console = logging.StreamHandler()
    console.setLevel(log_level)
    console.setFormatter(formatter)
    logger.addHandler(console)

    if log_to_file:
        logger.addHandler(_file_handler(name, log_level, formatter))
    return logger


def get_logger(name=Constants.LOGGER_NAME):
    """
    Logger of the circle_spline hierarchy.

    Module loggers ("circle_spline.<module>") have no handlers of their own; they
    propagate to the application logger, which gets a WARNING console handler the
    first time anything asks for a logger.

    Args:
        name (str): The name of the logger

    Returns:
        logging.Logger: The requested logger
    """
    application = logging.getLogger(Constants.LOGGER_NAME)
    if not application.handlers:
        setup_logger(Constants.LOGGER_NAME, log_level=logging.WARNING)
    return logging.getLogger(name)


def set_log_level(level):
    """
    Change the level of the application logger and of every handler attached to it.

    Args:
        level (int): The logging level (e.g., logging.DEBUG, logging.INFO)
    """
    application = get_logger()
    application.setLevel(level)
    for handler in application.handlers:
        handler.setLevel(level)
