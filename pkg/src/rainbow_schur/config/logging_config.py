import logging
import logging.config
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

from rainbow_schur.config.settings import settings

# Worker processes of the exhaustive search log through the same file handler.
FILE_FORMAT = "%(asctime)s [%(levelname)s] %(processName)s %(name)s: %(message)s"


def _stderr_rich_handler(**kwargs) -> RichHandler:
    """Rich console handler bound to stderr so JSON reports on stdout stay clean."""
    return RichHandler(console=Console(stderr=True), **kwargs)


def _rotating(filename: str, level: str = "DEBUG") -> dict[str, Any]:
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "level": level,
        "formatter": "standard",
        "filename": str(settings.LOGS_DIR / filename),
        "maxBytes": settings.LOG_FILE_MAX_BYTES,
        "backupCount": settings.LOG_FILE_BACKUPS,
        "encoding": "utf8",
    }


def build_logging_config(verbose: bool = False) -> dict[str, Any]:
    """dictConfig for the package logger plus a separate progress log for searches.

    Search progress and checkpoint messages go to ``search.log`` as well as the main
    log, so a long exhaustive run can be followed with ``tail -f`` on its own.
    """
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {"format": FILE_FORMAT},
            "rich": {"format": "%(message)s"},
        },
        "handlers": {
            "console": {
                "()": _stderr_rich_handler,
                "level": "DEBUG" if verbose else settings.LOG_LEVEL,
                "formatter": "rich",
                "rich_tracebacks": True,
                "show_time": False,
                "show_level": True,
                "show_path": False,
            },
            "file": _rotating("rainbow_schur.log"),
            "search_file": _rotating("search.log", level="INFO"),
        },
        "loggers": {
            "rainbow_schur": {
                "level": "DEBUG",
                "handlers": ["console", "file"],
                "propagate": False,
            },
            "rainbow_schur.search": {
                "level": "DEBUG",
                "handlers": ["search_file"],
                "propagate": True,
            },
        },
    }


def setup_logging(verbose: bool = False) -> None:
    """Initialize logging configuration."""
    settings.LOGS_DIR.mkdir(parents=True, exist_ok=True)
    logging.config.dictConfig(build_logging_config(verbose))
