# The MIT License (MIT)
# Copyright © 2024 vertexlab developers

# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the “Software”), to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all copies or substantial portions of
# the Software.

# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
# THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from rich.console import Console
from rich.traceback import install

# vertexlab version.
__version__ = "0.1.0"
version_split = __version__.split(".")
__version_as_int__ = (
    (100 * int(version_split[0]))
    + (10 * int(version_split[1]))
    + (1 * int(version_split[2]))
)

# Rich console, on stderr so stdout stays clean for reports.
__console__ = Console(stderr=True)
__use_console__ = True

install(show_locals=False)


def turn_console_off():
    global __use_console__
    global __console__
    from io import StringIO

    __use_console__ = False
    __console__ = Console(file=StringIO(), stderr=False)


def turn_console_on():
    global __use_console__
    global __console__
    __use_console__ = True
    __console__ = Console(stderr=True)


turn_console_on()

from vertexlab.errors import *  # noqa: E402,F401,F403
from vertexlab.config import Config, InvalidConfigFile  # noqa: E402,F401
from vertexlab.vllogging import logging  # noqa: E402,F401

from vertexlab.geometry.charts import (  # noqa: E402,F401
    EUCLIDEAN,
    HALF_PLANE,
    SPHERE_STEREO,
    ChartKind,
    ConformalChart,
    chart_gauss_curvature,
    conformal_geodesic_curvature,
)
from vertexlab.geometry.revolution import (  # noqa: E402,F401
    RevolutionSurface,
    arclength_gauss_curvature,
    gauss_curvature_revolution,
    intrinsic_geodesic_curvature,
    neck_closed_form_curvature,
    revolution_geodesic_curvature,
)
from vertexlab.geometry.geodesics import (  # noqa: E402,F401
    geodesic_shoot,
    geodesic_shoot_many,
    metric_circle,
)
from vertexlab.curves.curve import ClosedCurve  # noqa: E402,F401
from vertexlab.curves.profile import CurvatureProfile, curvature_profile, profile_to_rows  # noqa: E402,F401
from vertexlab.curves.vertices import (  # noqa: E402,F401
    InflectionReport,
    VertexReport,
    count_inflections,
    count_vertices,
    inflection_report,
    vertex_report,
)
from vertexlab.curves.sampling import (  # noqa: E402,F401
    random_antipodal_sphere_curve,
    random_simple_closed_curve,
    resample_by_arclength,
)
from vertexlab.maps.deck import (  # noqa: E402,F401
    DeckKind,
    DeckMotion,
    QuotientModel,
    check_deck_invariance,
    deck_apply,
    project_to_fundamental_domain,
    pullback_residual,
)
from vertexlab.maps.mobius import MobiusKind, MobiusMap, mobius_apply  # noqa: E402,F401
from vertexlab.maps.transfer import (  # noqa: E402,F401
    TransferDirection,
    antipodal_map,
    halfplane_inclusion_transfer,
    stereographic_transfer,
)
from vertexlab.maps.simplicity import SimplicityReport, quotient_simplicity_check  # noqa: E402,F401
from vertexlab.constructions.registry import FAMILIES, FamilyParams, build_family  # noqa: E402,F401
from vertexlab.reports import RunReport  # noqa: E402,F401
from vertexlab.cli import cli  # noqa: E402,F401
