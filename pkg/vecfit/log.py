import logging
import sys

from vecfit import settings


def get_logger(name):
    """Retorna o logger do módulo com um único StreamHandler em stderr."""
    logger = logging.getLogger(name)
    logger.setLevel(settings.LOG_LEVEL)
    if not any(getattr(h, "_vecfit", False) for h in logger.handlers):
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
        stream_handler._vecfit = True
        logger.addHandler(stream_handler)
    return logger
