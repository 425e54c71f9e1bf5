"""Geometric fire-spread toolkit.

Solvers and oracles for igniting fires on point sets so that every point
burns within few steps, plus a planar hardness gadget builder and a
line-oriented file format with a command line front end.
"""

from geoburn.burn2d import (
    anywhere_burning,
    k_burning_nonuniform,
    max_burn_schedule,
    point_burning,
    point_burning_nonuniform,
)
from geoburn.core import (
    ANYWHERE,
    POINT,
    TOL,
    BurnSchedule,
    BurnSource,
    GuessEntry,
    GuessTrace,
    Instance,
    Model,
    Point,
    ValidationReport,
    Violation,
    burn_radius,
    distance,
    is_burned,
    validate_schedule,
)
from geoburn.ioformats import (
    ParseError,
    generate,
    parse_instance,
    parse_lsat,
    parse_schedule,
    write_instance,
    write_lsat,
    write_schedule,
)
from geoburn.ptas1d import ptas_burning_line
from geoburn.render import render_svg

__all__ = [
    "ANYWHERE",
    "POINT",
    "TOL",
    "BurnSchedule",
    "BurnSource",
    "GuessEntry",
    "GuessTrace",
    "Instance",
    "Model",
    "ParseError",
    "Point",
    "ValidationReport",
    "Violation",
    "anywhere_burning",
    "burn_radius",
    "distance",
    "generate",
    "is_burned",
    "k_burning_nonuniform",
    "max_burn_schedule",
    "parse_instance",
    "parse_lsat",
    "parse_schedule",
    "point_burning",
    "point_burning_nonuniform",
    "ptas_burning_line",
    "render_svg",
    "validate_schedule",
]

__version__ = "0.1.0"
