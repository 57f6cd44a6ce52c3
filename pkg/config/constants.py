from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Constants:
    """
    Application constants: numerical tolerances, CLI defaults, exit codes and file layouts.
    """
    __slots__ = ()

    APPLICATION_VERSION = "1.0.0"
    LOGGER_NAME = "circle_spline"
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIRECTORY = Path("logs")

    # Relative tolerances of the homogeneous model
    NULL_TOLERANCE = 1e-9
    INFINITY_TOLERANCE = 1e-9
    FLAT_TOLERANCE = 1e-9
    ZERO_TOLERANCE = 1e-12
    ROTOR_TOLERANCE = 1e-9
    COPLANAR_TOLERANCE = 1e-6
    INCIDENCE_TOLERANCE = 1e-8
    PATHOLOGICAL_TOLERANCE = 1e-9

    SMALL_ANGLE = 1e-5
    CURVATURE_SIGN_CUTOFF = 1e-3
    EXP_SERIES_TOLERANCE = 1e-15
    EXP_SERIES_TERMS = 64
    EXP_SCALING_NORM = 0.5

    CONTINUITY_ORDERS = {"g1": 1, "g2": 2, "g3": 3}
    DEFAULT_CONTINUITY = "g2"
    DEFAULT_SAMPLES = 64
    DEFAULT_REFINE = 0
    DEFAULT_SUBDIV = 16

    CURVE_FORMATS = ("csv", "svg")
    SURFACE_FORMATS = ("obj", "csv")

    EXIT_OK = 0
    EXIT_PARSE = 2
    EXIT_GEOMETRY = 3
    EXIT_IO = 4

    CURVE_COLUMNS = ["segment", "lambda", "x", "y", "z"]
    SURFACE_COLUMNS = ["vertex", "lambda", "mu", "nu", "x", "y", "z"]
    CSV_FLOAT_FORMAT = "%.15g"
    OBJ_DIGITS = 12
    REPORT_DIGITS = 12

    SVG_SIZE = 800
    SVG_MARGIN = 20

    CONFIG_FILE = "config.json"
    SETTING_KEYS = ("samples", "continuity", "subdiv", "refine")
