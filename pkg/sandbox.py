import math
from pathlib import Path

from functions import count_curvature_sign_changes, show_progress_bar
from modules.circle_blend import BlendProfile, SplineSpec, build_spline
from modules.exporters import CurveExporter, MeshExporter
from modules.sphere_blend import make_patch, sample_mesh

PLANAR = [(0.0, 0.0, 0.0), (1.0, 1.2, 0.0), (2.5, 0.8, 0.0), (3.2, 2.4, 0.0), (4.8, 1.6, 0.0), (6.0, 3.0, 0.0)]
INVERSION = [(0.0, 0.567, 0.0), (1.0, 0.2392, 0.0), (2.0, 0.5673, 0.0), (3.0, 0.8769, 0.0), (4.0, 0.9108, 0.0),
             (5.0, -0.3348, 0.0)]


def _on_sphere(count):
    points = []
    for i in range(count):
        angle = 2.0 * math.pi * i / count
        height = 0.4 * math.sin(3.0 * angle)
        ring = math.sqrt(1.0 - height * height)
        points.append((ring * math.cos(angle), ring * math.sin(angle), height))
    return points


if __name__ == "__main__":
    output = Path("output")
    output.mkdir(exist_ok=True)

    for continuity in ("g1", "g2", "g3"):
        spec = SplineSpec(PLANAR, profile=BlendProfile.from_continuity(continuity), samples_per_segment=64)
        CurveExporter(build_spline(spec)).write_svg(output / f"planar-{continuity}.svg")
        print(f"[LOG] Planar spline with {continuity} continuity written.")

    spec = SplineSpec(_on_sphere(7), closed=True, samples_per_segment=48)
    samples = build_spline(spec, progress_callback=show_progress_bar)
    CurveExporter(samples).write_csv(output / "sphere.csv")
    worst = max(abs(math.dist(s.point, (0.0, 0.0, 0.0)) - 1.0) for s in samples)
    print(f"[LOG] Closed spline on the unit sphere, largest radial error {worst:.3e}.")

    for depth in (0, 1, 2):
        spec = SplineSpec(INVERSION, samples_per_segment=64, refine_depth=depth)
        samples = build_spline(spec)
        CurveExporter(samples).write_svg(output / f"inversion-refine-{depth}.svg")
        changes = count_curvature_sign_changes([s.point for s in samples], tolerance=1e-9)
        print(f"[LOG] Refinement depth {depth}: {changes} curvature sign changes.")

    height = math.sqrt(2.0 / 3.0)
    vertices = [(1.0, 0.0, 0.0), (-0.5, math.sqrt(3.0) / 2.0, 0.0), (-0.5, -math.sqrt(3.0) / 2.0, 0.0)]
    apexes = [(0.3, 0.0, height), (-0.15, 0.26, height), (-0.15, -0.26, 0.5 * height)]
    mesh = sample_mesh(make_patch(*vertices, *apexes), 16, progress_callback=show_progress_bar)
    MeshExporter(mesh).write_obj(output / "patch.obj")
    print(f"[LOG] Blended patch written with {len(mesh.vertices)} vertices.")
