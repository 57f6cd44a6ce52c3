import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pandas as pd

from config import Constants
from functions import format_significant, get_logger, least_variance_axis

logger = get_logger("circle_spline.exporters")


class CurveExporter:
    """
    Writes sampled spline points as CSV or as an SVG polyline.
    """

    __slots__ = ("samples",)

    def __init__(self, samples):
        """
        :param samples: List of SplineSample (segment, lam, point) rows.
        """
        self.samples = samples

    def to_dataframe(self):
        rows = [(s.segment, s.lam, *s.point) for s in self.samples]
        return pd.DataFrame(rows, columns=Constants.CURVE_COLUMNS)

    def write_csv(self, path):
        self.to_dataframe().to_csv(path, index=False, float_format=Constants.CSV_FLOAT_FORMAT, lineterminator="\n")
        logger.info(f"Wrote {len(self.samples)} curve samples to {path}")

    def projected(self):
        """
        Project the samples onto the two coordinate axes other than the one of least variance.
        :return: (n, 2) numpy array.
        """
        coords = np.array([s.point for s in self.samples], dtype=float)
        dropped = least_variance_axis(coords)
        kept = [axis for axis in range(3) if axis != dropped]
        return coords[:, kept]

    def write_svg(self, path):
        plane = self.projected()
        low, high = plane.min(axis=0), plane.max(axis=0)
        extent = float(np.max(high - low)) or 1.0
        usable = Constants.SVG_SIZE - 2 * Constants.SVG_MARGIN
        scale = usable / extent

        # SVG y grows downward
        xs = Constants.SVG_MARGIN + (plane[:, 0] - low[0]) * scale
        ys = Constants.SVG_SIZE - Constants.SVG_MARGIN - (plane[:, 1] - low[1]) * scale
        points = " ".join(f"{x:.6f},{y:.6f}" for x, y in zip(xs, ys))

        size = str(Constants.SVG_SIZE)
        svg = ET.Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "width": size, "height": size,
                                 "viewBox": f"0 0 {size} {size}"})
        ET.SubElement(svg, "polyline", {"points": points, "fill": "none", "stroke": "black", "stroke-width": "1"})
        ET.ElementTree(svg).write(path, encoding="utf-8", xml_declaration=True)
        logger.info(f"Wrote SVG polyline of {len(plane)} points to {path}")


class MeshExporter:
    """
    Writes a sampled triangle patch as Wavefront OBJ or as a per-vertex CSV.
    """

    __slots__ = ("mesh",)

    def __init__(self, mesh):
        self.mesh = mesh

    def write_obj(self, path):
        digits = Constants.OBJ_DIGITS
        lines = []
        for vertex in self.mesh.vertices:
            lines.append("v " + " ".join(format_significant(c, digits) for c in vertex))
        for face in self.mesh.faces:
            lines.append("f " + " ".join(str(index + 1) for index in face))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info(f"Wrote OBJ with {len(self.mesh.vertices)} vertices and {len(self.mesh.faces)} faces to {path}")

    def write_csv(self, path):
        rows = [(index, *weights, *vertex)
                for index, (weights, vertex) in enumerate(zip(self.mesh.weights, self.mesh.vertices))]
        df = pd.DataFrame(rows, columns=Constants.SURFACE_COLUMNS)
        df.to_csv(path, index=False, float_format=Constants.CSV_FLOAT_FORMAT, lineterminator="\n")
        logger.info(f"Wrote {len(rows)} surface samples to {path}")


def format_inspect_report(records):
    """
    One line per consecutive control-point triple.

    Each record is a dict with keys "index", "radius" (None for a line), "centre"
    (None for a line), "theta" (None for the last triple, or a message string) and
    "error" (None, or why the triple has no circle).
    """
    digits = Constants.REPORT_DIGITS
    lines = []
    for record in records:
        if record.get("error"):
            shape = f"radius=degenerate ({record['error']}) centre=-"
        elif record["radius"] is None:
            shape = "radius=line centre=-"
        else:
            centre = ", ".join(f"{c:.{digits}f}" for c in record["centre"])
            shape = f"radius={record['radius']:.{digits}f} centre=({centre})"

        theta = record["theta"]
        if theta is None:
            theta_text = "-"
        elif isinstance(theta, str):
            theta_text = theta
        else:
            theta_text = f"{theta:.{digits}f}"
        lines.append(f"triple {record['index']}: {shape} theta={theta_text}")
    return "\n".join(lines) + "\n"
