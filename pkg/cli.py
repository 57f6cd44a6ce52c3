import argparse
import logging
import sys
from dataclasses import dataclass

from config import Constants
from functions import get_logger, is_coplanar, load_control_points, load_settings, setup_logger, show_progress_bar
from modules.circle_blend import BlendProfile, SplineSpec, build_spline, make_segment
from modules.conformal import embed_point
from modules.exceptions import GeometryError, InputError, InvalidSpline, PathologicalConfiguration
from modules.exporters import CurveExporter, MeshExporter, format_inspect_report
from modules.primitives import center_of, circle_radius, circle_through, is_flat
from modules.sphere_blend import make_patch, sample_mesh

logger = get_logger("circle_spline.cli")


@dataclass(frozen=True)
class CurveRequest:
    input_path: str
    output_path: str
    continuity: str = Constants.DEFAULT_CONTINUITY
    samples: int = Constants.DEFAULT_SAMPLES
    closed: bool = False
    refine: int = Constants.DEFAULT_REFINE
    fmt: str = "csv"
    progress: bool = False


@dataclass(frozen=True)
class SurfaceRequest:
    input_path: str
    output_path: str
    subdiv: int = Constants.DEFAULT_SUBDIV
    fmt: str = "obj"
    progress: bool = False


def _read_points(path):
    try:
        return load_control_points(path)
    except ValueError as e:
        raise InputError(str(e)) from e


def _progress(enabled, label):
    if not enabled:
        return None
    return lambda processed, total: show_progress_bar(processed, total, label)


def _guarded(action):
    """
    Run action and map failures onto exit codes.
    """
    try:
        action()
    except (InputError, InvalidSpline) as e:
        logger.error(f"Rejected input: {e}")
        sys.stderr.write(f"error: {e}\n")
        return Constants.EXIT_PARSE
    except GeometryError as e:
        logger.error(f"Geometry failure: {e}")
        sys.stderr.write(f"error: {e}\n")
        return Constants.EXIT_GEOMETRY
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        sys.stderr.write(f"error: {e}\n")
        return Constants.EXIT_IO
    return Constants.EXIT_OK


def run_curve(request):
    def action():
        points, _ = _read_points(request.input_path)
        if request.fmt == "svg" and not is_coplanar(points, Constants.COPLANAR_TOLERANCE):
            raise InputError("svg output needs coplanar control points")
        spec = SplineSpec(points, closed=request.closed, profile=BlendProfile.from_continuity(request.continuity),
                          samples_per_segment=request.samples, refine_depth=request.refine)
        logger.info(f"Building {'closed' if spec.closed else 'open'} spline through {len(points)} points")
        samples = build_spline(spec, progress_callback=_progress(request.progress, "Sampling segments"))

        exporter = CurveExporter(samples)
        if request.fmt == "svg":
            exporter.write_svg(request.output_path)
        else:
            exporter.write_csv(request.output_path)

    return _guarded(action)


def run_surface(request):
    def action():
        vertices, apexes = _read_points(request.input_path)
        if len(vertices) != 3 or len(apexes) != 3:
            raise InputError(f"a surface patch needs 3 points and 3 apexes, "
                             f"got {len(vertices)} and {len(apexes)}")
        patch = make_patch(*vertices, *apexes)
        logger.info(f"Sampling patch with {request.subdiv} subdivisions")
        mesh = sample_mesh(patch, request.subdiv, progress_callback=_progress(request.progress, "Sampling rows"))

        exporter = MeshExporter(mesh)
        if request.fmt == "csv":
            exporter.write_csv(request.output_path)
        else:
            exporter.write_obj(request.output_path)

    return _guarded(action)


def _through_circle(points):
    try:
        return circle_through(*points), None
    except GeometryError as e:
        return None, str(e)


def inspection_records(points):
    """
    Radius, centre and resolved blend angle with the next circle for every consecutive triple.
    Geometric failures are reported in the record instead of aborting the report.
    """
    embedded = [embed_point(p) for p in points]
    circles = [_through_circle(embedded[i:i + 3]) for i in range(len(embedded) - 2)]

    records = []
    for index, (circle, error) in enumerate(circles):
        record = {"index": index, "radius": None, "centre": None, "theta": None, "error": error}
        if circle is not None and not is_flat(circle):
            record["radius"] = circle_radius(circle)
            record["centre"] = tuple(center_of(circle).euclidean())
        if index + 1 < len(circles):
            following = circles[index + 1][0]
            if circle is None or following is None:
                record["theta"] = "undefined (degenerate triple)"
            else:
                try:
                    seg = make_segment(embedded[index + 1], embedded[index + 2], circle, following)
                    record["theta"] = seg.theta
                except PathologicalConfiguration as e:
                    record["theta"] = f"pathological ({e})"
                except GeometryError as e:
                    record["theta"] = f"undefined ({e})"
        records.append(record)
    return records


def inspect(input_path, output_path=None):
    def action():
        points, _ = _read_points(input_path)
        if len(points) < 3:
            raise InputError(f"inspect needs at least 3 points, got {len(points)}")
        report = format_inspect_report(inspection_records(points))
        if output_path:
            with open(output_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(report)
        else:
            sys.stdout.write(report)

    return _guarded(action)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _defaults():
    """
    Built-in defaults, overridden by valid entries of the settings file.
    """
    defaults = {"samples": Constants.DEFAULT_SAMPLES, "continuity": Constants.DEFAULT_CONTINUITY,
                "subdiv": Constants.DEFAULT_SUBDIV, "refine": Constants.DEFAULT_REFINE}
    for key, value in load_settings().items():
        if key == "continuity":
            valid = isinstance(value, str) and value.lower() in Constants.CONTINUITY_ORDERS
            value = value.lower() if valid else value
        elif key == "refine":
            valid = isinstance(value, int) and not isinstance(value, bool) and value >= 0
        else:
            valid = isinstance(value, int) and not isinstance(value, bool) and value >= 1
        if valid:
            defaults[key] = value
        else:
            logger.warning(f"Ignoring invalid setting {key}={value!r}")
    return defaults


def build_parser(defaults=None):
    defaults = defaults or _defaults()
    parser = argparse.ArgumentParser(prog="circle-spline",
                                     description="Circle splines and sphere-blended patches in the conformal model.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {Constants.APPLICATION_VERSION}")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--log-file", action="store_true", help="also log to a file under logs/")
    commands = parser.add_subparsers(dest="command", required=True)

    curve = commands.add_parser("curve", help="sample a circle spline through control points")
    curve.add_argument("input", help='JSON file {"points": [[x, y, z], ...]}')
    curve.add_argument("--continuity", choices=list(Constants.CONTINUITY_ORDERS), default=defaults["continuity"])
    curve.add_argument("--samples", type=_positive_int, default=defaults["samples"])
    curve.add_argument("--closed", action="store_true")
    curve.add_argument("--refine", type=_non_negative_int, default=defaults["refine"])
    curve.add_argument("--format", dest="fmt", choices=Constants.CURVE_FORMATS, default="csv")
    curve.add_argument("--output", required=True)
    curve.add_argument("--progress", action="store_true", help="show a progress bar on stderr")

    surface = commands.add_parser("surface", help="sample a triangular patch from 3 points and 3 apexes")
    surface.add_argument("input", help='JSON file {"points": [...3 vertices], "apexes": [...3 apexes]}')
    surface.add_argument("--subdiv", type=_positive_int, default=defaults["subdiv"])
    surface.add_argument("--format", dest="fmt", choices=Constants.SURFACE_FORMATS, default="obj")
    surface.add_argument("--output", required=True)
    surface.add_argument("--progress", action="store_true", help="show a progress bar on stderr")

    report = commands.add_parser("inspect", help="report circles through consecutive control-point triples")
    report.add_argument("input")
    report.add_argument("--output", default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else Constants.EXIT_PARSE

    setup_logger(Constants.LOGGER_NAME, log_level=getattr(logging, args.log_level), log_to_file=args.log_file)
    logger.info(f"Running {args.command} on {args.input}")

    if args.command == "curve":
        status = run_curve(CurveRequest(args.input, args.output, args.continuity, args.samples, args.closed,
                                        args.refine, args.fmt, args.progress))
        if status == Constants.EXIT_PARSE:
            parser.print_usage(sys.stderr)
    elif args.command == "surface":
        status = run_surface(SurfaceRequest(args.input, args.output, args.subdiv, args.fmt, args.progress))
    else:
        status = inspect(args.input, args.output)

    logger.info(f"{args.command} finished with exit status {status}")
    return status
