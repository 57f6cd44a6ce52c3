import tempfile
import unittest
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pandas as pd

from modules.circle_blend import SplineSample, SplineSpec, build_spline
from modules.conformal import Euclidean3
from modules.exporters import CurveExporter, MeshExporter, format_inspect_report
from modules.sphere_blend import TriangleMesh, make_patch, sample_mesh

SVG_NAMESPACE = "{http://www.w3.org/2000/svg}"


def samples_of(points):
    last = len(points) - 1
    return [SplineSample(0, k / last, Euclidean3(*p)) for k, p in enumerate(points)]


class ExporterTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.folder = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()


class TestCurveExporter(ExporterTestCase):

    def test_csv_text(self):
        path = self.folder / "curve.csv"
        CurveExporter(samples_of([(0.0, 0.0, 0.0), (1.0, 0.25, 0.0)])).write_csv(path)
        self.assertEqual(path.read_text(encoding="utf-8"), "segment,lambda,x,y,z\n0,0,0,0,0\n0,1,1,0.25,0\n")

    def test_csv_keeps_full_precision(self):
        path = self.folder / "curve.csv"
        samples = build_spline(SplineSpec([(0, 0, 0), (1, 1, 0), (2.5, 0.5, 0.3), (3, 2, -0.2)],
                                          samples_per_segment=5))
        CurveExporter(samples).write_csv(path)
        frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["segment", "lambda", "x", "y", "z"])
        self.assertEqual(len(frame), 16)
        np.testing.assert_allclose(frame[["x", "y", "z"]].to_numpy(), [s.point for s in samples], rtol=1e-14)

    def test_projection_drops_the_flat_axis(self):
        exporter = CurveExporter(samples_of([(0.0, 2.0, 0.0), (1.0, 2.0, 3.0), (2.0, 2.0, 1.0)]))
        np.testing.assert_allclose(exporter.projected(), [(0.0, 0.0), (1.0, 3.0), (2.0, 1.0)])

    def test_svg_polyline(self):
        path = self.folder / "curve.svg"
        CurveExporter(samples_of([(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (1.0, 1.0, 0.0)])).write_svg(path)
        root = ET.parse(path).getroot()
        self.assertEqual(root.tag, f"{SVG_NAMESPACE}svg")
        polylines = root.findall(f"{SVG_NAMESPACE}polyline")
        self.assertEqual(len(polylines), 1)
        self.assertEqual(polylines[0].get("points"),
                         "20.000000,780.000000 780.000000,780.000000 780.000000,20.000000")


class TestMeshExporter(ExporterTestCase):

    def setUp(self):
        super().setUp()
        self.mesh = TriangleMesh([Euclidean3(0.0, 0.0, 0.0), Euclidean3(1.0, 0.0, 0.0), Euclidean3(0.0, 1.0, -0.0)],
                                 [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)], [(0, 1, 2)])

    def test_obj_text(self):
        path = self.folder / "patch.obj"
        MeshExporter(self.mesh).write_obj(path)
        self.assertEqual(path.read_text(encoding="utf-8"), "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n")

    def test_obj_structure_of_a_sampled_patch(self):
        path = self.folder / "patch.obj"
        apex = (0.0, 0.0, 0.5)
        patch = make_patch((1.0, 0.0, 0.0), (-0.5, 0.8660254037844386, 0.0), (-0.5, -0.8660254037844386, 0.0),
                           apex, apex, apex)
        MeshExporter(sample_mesh(patch, 4)).write_obj(path)
        lines = path.read_text(encoding="utf-8").splitlines()
        vertices = [line for line in lines if line.startswith("v ")]
        faces = [line for line in lines if line.startswith("f ")]
        self.assertEqual((len(vertices), len(faces)), (15, 16))
        self.assertEqual(lines, vertices + faces)
        for line in faces:
            indices = [int(token) for token in line.split()[1:]]
            self.assertTrue(all(1 <= index <= 15 for index in indices))
        for line in vertices:
            self.assertEqual(len(line.split()), 4)

    def test_csv(self):
        path = self.folder / "patch.csv"
        MeshExporter(self.mesh).write_csv(path)
        frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["vertex", "lambda", "mu", "nu", "x", "y", "z"])
        self.assertEqual(frame["vertex"].tolist(), [0, 1, 2])
        self.assertEqual(frame["nu"].tolist(), [0.0, 0.0, 1.0])


class TestInspectReport(unittest.TestCase):

    def test_records(self):
        records = [
            {"index": 0, "radius": 1.0, "centre": (0.0, 0.5, 0.0), "theta": 0.25},
            {"index": 1, "radius": None, "centre": None, "theta": "pathological (circles are opposite)"},
            {"index": 2, "radius": 2.0, "centre": (1.0, 1.0, 1.0), "theta": None},
        ]
        lines = format_inspect_report(records).splitlines()
        self.assertEqual(lines[0], "triple 0: radius=1.000000000000 centre=(0.000000000000, 0.500000000000, "
                                   "0.000000000000) theta=0.250000000000")
        self.assertEqual(lines[1], "triple 1: radius=line centre=- theta=pathological (circles are opposite)")
        self.assertTrue(lines[2].endswith("theta=-"))


if __name__ == "__main__":
    unittest.main()
