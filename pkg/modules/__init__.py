from .circle_blend import (BlendProfile, Segment, SplineSampler, SplineSample, SplineSpec, build_spline,
                           make_segment, refine_midpoints, spline_segments, subdivide)
from .conformal import ConformalPoint, Euclidean3, embed_point, extract_point
from .exporters import CurveExporter, MeshExporter, format_inspect_report
from .ga_core import Multivector, Rotor
from .sphere_blend import Barycentric, TriangleMesh, TrianglePatch, make_patch, sample_mesh
