import logging
import sys

from core.settings import load_settings


def configure_logging(level: str | None = None) -> None:
    settings = load_settings()
    cfg = settings.get("logging", {})
    logging.basicConfig(
        level=getattr(logging, (level or cfg.get("level", "INFO")).upper(), logging.INFO),
        format=cfg.get("format", "%(asctime)s [%(levelname)s] %(message)s"),
        stream=sys.stderr,
    )
