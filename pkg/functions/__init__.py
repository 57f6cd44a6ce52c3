from .logger import get_logger, setup_logger, set_log_level
from .barycentric_lattice import barycentric_lattice, lattice_faces
from .circumcircle import circumcircle
from .circumsphere import circumsphere
from .count_curvature_sign_changes import count_curvature_sign_changes
from .format_significant import format_significant
from .is_coplanar import is_coplanar
from .least_variance_axis import least_variance_axis
from .load_control_points import load_control_points
from .load_settings import load_settings
from .show_progress_bar import show_progress_bar
from .smoothstep import smoothstep
from .three_point_curvature import three_point_curvature
