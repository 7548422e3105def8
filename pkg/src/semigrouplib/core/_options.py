"""Tunable limits shared by every enumeration in the package."""

import dataclasses


@dataclasses.dataclass(frozen=True)
class SemigroupOptions:
    """Configures the enumerations performed on a semigroup.

    Attributes
    ----------
    enumeration_budget : int
        The largest absolute determinant of the ray matrix for which the
        lattice points of the fundamental parallelotope will be enumerated.
        The number of such points equals the determinant, so this bounds the
        size of every derived set. Default: 1,000,000.
    box_budget : int
        The largest number of integer points that a single box scan may visit.
        Box scans are used to enumerate the parallelotope, the slack of trace
        certificates and the candidates of the Ulrich search.
        Default: 10,000,000.

    """

    enumeration_budget: int = 10**6
    box_budget: int = 10**7

    def __post_init__(self):
        if self.enumeration_budget < 1:
            raise ValueError("The enumeration budget must be a positive integer.")
        if self.box_budget < 1:
            raise ValueError("The box budget must be a positive integer.")
