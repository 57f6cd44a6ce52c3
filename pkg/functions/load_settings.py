import json
from pathlib import Path

from config import Constants
from .logger import get_logger

logger = get_logger("circle_spline.settings")


def load_settings(path=Constants.CONFIG_FILE):
    """
    Read CLI default overrides from a JSON settings file.

    Only the keys in Constants.SETTING_KEYS are kept. A missing file yields no
    overrides; an unreadable or malformed one is ignored with a warning.
    """
    settings_path = Path(path)
    if not settings_path.exists():
        return {}

    try:
        document = json.loads(settings_path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        logger.warning(f"Ignoring settings file {settings_path}: {e}")
        return {}

    if not isinstance(document, dict):
        logger.warning(f"Ignoring settings file {settings_path}: expected a JSON object")
        return {}

    unknown = sorted(set(document) - set(Constants.SETTING_KEYS))
    if unknown:
        logger.warning(f"Unknown settings ignored: {', '.join(unknown)}")
    return {key: document[key] for key in Constants.SETTING_KEYS if key in document}
