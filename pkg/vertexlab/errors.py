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

from typing import Optional, Sequence


class VertexLabError(Exception):
    r"""Base error for every geometric or numerical failure raised by vertexlab."""

    pass


class DomainError(VertexLabError):
    r"""Error raised when a point leaves the domain of a chart or the parameter interval of a surface."""

    pass


class RegularityError(VertexLabError):
    r"""Error raised when a curve has (numerically) vanishing velocity."""

    pass


class GeodesicEscapeError(DomainError):
    r"""Error raised when a geodesic exits the chart domain before reaching the requested length.

    Attributes:
        exit_parameter (float): arclength at which the geodesic left the domain.
        position (Sequence[float], optional): last position inside the domain.
    """

    def __init__(
        self,
        message: str,
        exit_parameter: float,
        position: Optional[Sequence[float]] = None,
    ):
        self.exit_parameter = exit_parameter
        self.position = position
        super().__init__(message)


class InjectivityRadiusError(VertexLabError):
    r"""Error raised when a metric circle is requested beyond the injectivity guard."""

    pass


class ResolutionError(VertexLabError):
    r"""Error raised when the sample grid is too coarse to separate neighbouring critical points."""

    pass


class PoleError(VertexLabError):
    r"""Error raised when a curve runs into the pole of a projection or of a Möbius map."""

    pass


class ParameterError(VertexLabError):
    r"""Error raised when construction parameters are outside their admissible range."""

    pass


class GenerationError(VertexLabError):
    r"""Error raised when random curve generation exhausts its rejection budget."""

    pass


class DeckInvarianceError(VertexLabError):
    r"""Error raised when a curve is not invariant under the deck motion it is tagged with."""

    pass


class UnknownFamilyError(VertexLabError):
    r"""Error raised when a curve family name is not in the registry."""

    pass


class UnknownSuiteError(VertexLabError):
    r"""Error raised when a verification suite name is not known."""

    pass


class ReportFormatError(VertexLabError):
    r"""Error raised when a report file cannot be exported to the requested format."""

    pass


class ConfigurationError(Exception):
    r"""Error raised when the command line configuration is inconsistent."""

    pass
