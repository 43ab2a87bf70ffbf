"""Exact constructions and theorem checks for the parametrised Conway configuration."""
from .configuration import ANTI_CONWAY, CONWAY, Configuration, Triplet, hexagon_metrics, six_points
from .errors import GeometryError
from .numerics import FloatPolicy, QuadExt, Rational, as_rational
from .triangle import BaryPoint, Shape, Triangle, classify, contact_points, embed, incenter, nagel

__version__ = "0.1.0"
