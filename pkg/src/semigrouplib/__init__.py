"""A package for classifying normal simplicial affine semigroups."""

__version__ = "0.1.0"

from .core import (
    SemigroupError,
    ZeroVector,
    DimensionMismatch,
    InvalidRays,
    LimitExceeded,
    NotInOmega,
    Inapplicable,
    MalformedDocument,
    SemigroupOptions,
    IntVector,
    Rational,
    Barycentric,
    ConePosition,
    RaySystem,
    make_primitive,
    barycentric,
    cone_position,
    in_parallelotope,
    parallelotope_points,
    SemigroupModel,
    SlimVerdict,
    hilbert_basis,
    build,
    contains,
    contains_shifted,
    in_omega,
    omega_generators,
    is_slim,
    minimal_omega_elements,
    bottom_element,
    is_gorenstein,
)

from . import io
from . import oracle
from . import planar
from . import plot
from . import reports
from . import survey
from . import trace

__all__ = [
    "SemigroupError",
    "ZeroVector",
    "DimensionMismatch",
    "InvalidRays",
    "LimitExceeded",
    "NotInOmega",
    "Inapplicable",
    "MalformedDocument",
    "SemigroupOptions",
    "IntVector",
    "Rational",
    "Barycentric",
    "ConePosition",
    "RaySystem",
    "make_primitive",
    "barycentric",
    "cone_position",
    "in_parallelotope",
    "parallelotope_points",
    "SemigroupModel",
    "SlimVerdict",
    "hilbert_basis",
    "build",
    "contains",
    "contains_shifted",
    "in_omega",
    "omega_generators",
    "is_slim",
    "minimal_omega_elements",
    "bottom_element",
    "is_gorenstein",
    "io",
    "oracle",
    "planar",
    "plot",
    "reports",
    "survey",
    "trace",
]
