from ._exceptions import (
    SemigroupError,
    ZeroVector,
    DimensionMismatch,
    InvalidRays,
    LimitExceeded,
    NotInOmega,
    Inapplicable,
    MalformedDocument,
)
from ._options import SemigroupOptions
from ._lattice import (
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
)
from ._semigroup import (
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
]
