import json
import math
from pathlib import Path


def _parse_triples(raw, key):
    if not isinstance(raw, list):
        raise ValueError(f'"{key}" must be a list of [x, y, z] triples')
    triples = []
    for index, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f'{key}[{index}] must be a list of three numbers')
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item):
            raise ValueError(f'{key}[{index}] contains a non-numeric coordinate')
        values = tuple(float(v) for v in item)
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f'{key}[{index}] contains a non-finite coordinate')
        triples.append(values)
    return triples


def load_control_points(path):
    """
    Read a control-point file of the form {"points": [[x, y, z], ...], "apexes": [[x, y, z], ...]}.
    "apexes" is optional.
    :param path: Path to the JSON file.
    :return: (points, apexes) as lists of float triples; apexes is empty when absent.
    :raises ValueError: on malformed content. OSError propagates for unreadable files.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid JSON in {path}: {e}") from e

    if not isinstance(document, dict) or "points" not in document:
        raise ValueError(f'{path}: expected an object with a "points" list')
    points = _parse_triples(document["points"], "points")
    apexes = _parse_triples(document.get("apexes", []), "apexes")
    return points, apexes
