"""Deciding whether the trace of the canonical ideal contains the maximal ideal.

The trace of ``ω_H`` is spanned by the points ``c + g + h`` where ``g`` is an
interior generator, ``h`` lies in ``H``, and the shift ``c`` is an integer
point with ``c + g' ∈ H`` for every interior generator ``g'``. The semigroup is
nearly Gorenstein when every Hilbert basis element is such a point.

"""

import dataclasses
import itertools
import logging
import math
from typing import Dict, Optional

from .core import IntVector, LimitExceeded, SemigroupModel, contains

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TraceCertificate:
    """Proof that a basis element lies in the trace of ``ω_H``.

    Attributes
    ----------
    target : IntVector
        The basis element.
    shift : IntVector
        An integer point with ``shift + g' ∈ H`` for every interior generator.
    generator : IntVector
        An interior generator.
    slack : IntVector
        A point of ``H``. The target is ``shift + generator + slack``.

    """

    target: IntVector
    shift: IntVector
    generator: IntVector
    slack: IntVector

    def is_valid(self, m: SemigroupModel) -> bool:
        """Recheck the certificate against the model."""
        total = tuple(c + g + h for c, g, h in zip(self.shift, self.generator, self.slack))
        return (
            total == tuple(self.target)
            and self.generator in m.omega_gens
            and contains(m, self.slack)
            and _admissible(m, self.shift)
        )


@dataclasses.dataclass(frozen=True)
class TraceVerdict:
    """The outcome of :func:`is_nearly_gorenstein`.

    Unpacks as ``(nearly_gorenstein, certificates)``.

    Attributes
    ----------
    nearly_gorenstein : bool
        Whether every basis element has a certificate.
    certificates : dict
        Maps each basis element to its :class:`TraceCertificate`, or to None
        when the element is not in the trace.

    """

    nearly_gorenstein: bool
    certificates: Dict[IntVector, Optional[TraceCertificate]]

    def __iter__(self):
        return iter((self.nearly_gorenstein, self.certificates))

    @property
    def failures(self) -> list:
        """The basis elements outside the trace, sorted."""
        return sorted(a for a, cert in self.certificates.items() if cert is None)


# private helpers ======================================================================


def _admissible(m: SemigroupModel, shift) -> bool:
    return all(
        contains(m, tuple(c + g for c, g in zip(shift, gen))) for gen in m.omega_gens
    )


def _certificate(m: SemigroupModel, a: IntVector) -> Optional[TraceCertificate]:
    lowest = tuple(min(col) for col in zip(*m.omega_gens))
    budget = m.options.box_budget

    for g in m.omega_gens:
        # shift + lowest must stay in N^d, which bounds the slack
        upper = tuple(ai - gi + li for ai, gi, li in zip(a, g, lowest))
        if any(x < 0 for x in upper):
            continue

        box_size = math.prod(x + 1 for x in upper)
        if box_size > budget:
            raise LimitExceeded("The trace slack box", box_size, budget)

        for h in itertools.product(*(range(x + 1) for x in upper)):
            if not contains(m, h):
                continue
            shift = tuple(ai - gi - hi for ai, gi, hi in zip(a, g, h))
            if _admissible(m, shift):
                return TraceCertificate(target=a, shift=shift, generator=g, slack=h)
    return None


# public functions =====================================================================


def is_nearly_gorenstein(m: SemigroupModel) -> TraceVerdict:
    """Decide whether the semigroup is nearly Gorenstein.

    For each basis element ``a`` and interior generator ``g``, the slack ``h``
    ranges over the points of ``H`` with
    ``0 <= h <= a - g + min(g')`` componentwise, the minimum being taken over
    the interior generators coordinate by coordinate. Outside this box the
    shift ``a - g - h`` would move some generator out of N^d. The search is
    therefore exact.

    Parameters
    ----------
    m : SemigroupModel
        The semigroup.

    Returns
    -------
    TraceVerdict

    Raises
    ------
    LimitExceeded
        If a slack box exceeds the box budget of the model.

    Notes
    -----
    Every planar semigroup is nearly Gorenstein. In higher dimension the
    answer is still exact, but may be negative.

    """
    certificates = {a: _certificate(m, a) for a in m.hilbert_basis}
    verdict = TraceVerdict(
        nearly_gorenstein=all(c is not None for c in certificates.values()),
        certificates=certificates,
    )
    if not verdict.nearly_gorenstein:
        logger.debug("basis elements outside the trace: %s", verdict.failures)
    return verdict


def nearly_fast_path(m: SemigroupModel) -> bool:
    """A sufficient condition: each basis element ``a`` has a generator ``g``
    with ``a - g`` an admissible shift.

    A true answer implies :func:`is_nearly_gorenstein`; a false answer is
    inconclusive.

    """
    return all(
        any(_admissible(m, tuple(x - y for x, y in zip(a, g))) for g in m.omega_gens)
        for a in m.hilbert_basis
    )
