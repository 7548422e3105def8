"""Exhaustive sweeps over planar semigroups with bounded ray entries.

A sweep visits every ordered pair of primitive rays ``a_1 = (x_1, y_1)``,
``a_2 = (x_2, y_2)`` with entries in ``[0, N]`` and ``y_1/x_1 < y_2/x_2``, in
increasing order of ``(x_1, y_1, x_2, y_2)``. Each pair is analyzed
independently, optionally in a pool of worker processes; the output order
never depends on the schedule.

"""

import concurrent.futures as _futures
import dataclasses
import functools
import itertools
import logging
import math
from typing import Iterator, List, Optional, Tuple

import pandas as pd

from . import _util
from . import oracle as _oracle
from .core import (
    Inapplicable,
    IntVector,
    SemigroupOptions,
    build,
    in_omega,
    is_gorenstein,
    parallelotope_points,
)
from .planar import (
    cross,
    h1_star_recursive,
    h_star,
    h_star_count,
    is_ag,
    is_ulrich,
    is_ulrich_bottom,
    orient,
    ulrich_one_one,
)
from .trace import is_nearly_gorenstein, nearly_fast_path

logger = logging.getLogger(__name__)

Instance = Tuple[IntVector, IntVector]

COLUMNS = [
    "x1",
    "y1",
    "x2",
    "y2",
    "gorenstein",
    "gorenstein_by_determinants",
    "ag1",
    "ag2",
    "bottom_ulrich",
    "residue_verdict",
    "nearly_gorenstein",
    "mismatch",
]
"""The header of the survey table, in order."""


@dataclasses.dataclass(frozen=True)
class Mismatch:
    """Two code paths that disagree on one instance.

    Attributes
    ----------
    instance : Instance
        The oriented rays.
    check : str
        What was compared.
    fast : str
        The answer of the library's own code path.
    oracle : str
        The answer of the reference path.

    """

    instance: Instance
    check: str
    fast: str
    oracle: str

    def __str__(self):
        a1, a2 = self.instance
        return f"{a1} {a2} {self.check}: fast={self.fast} oracle={self.oracle}"


# private helpers ======================================================================


def _primitive_vectors(max_entry: int) -> list:
    return [
        (x, y)
        for x, y in itertools.product(range(max_entry + 1), repeat=2)
        if math.gcd(x, y) == 1
    ]


def _run(fn, items, jobs: int) -> list:
    if jobs <= 1:
        return [fn(item) for item in items]
    with _futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=64))


def _compare(found: list, instance, check, fast, reference):
    if fast != reference:
        found.append(Mismatch(instance, check, repr(fast), repr(reference)))


# public functions =====================================================================


def instances(max_entry: int, require_ones_interior: bool = False) -> Iterator[Instance]:
    """Every oriented pair of primitive rays with entries at most `max_entry`.

    Parameters
    ----------
    max_entry : int
        The bound ``N`` on every ray coordinate.
    require_ones_interior : bool
        Only yield pairs whose cone has ``(1, 1)`` in its interior, that is
        ``y_1 < x_1`` and ``x_2 < y_2``.

    Raises
    ------
    ValueError
        If `max_entry` is negative.

    """
    if max_entry < 0:
        raise ValueError("The bound on ray entries must be nonnegative.")

    vectors = _primitive_vectors(max_entry)
    for a1, a2 in itertools.product(vectors, repeat=2):
        if cross(a1, a2) <= 0:
            continue
        if require_ones_interior and not (a1[1] < a1[0] and a2[0] < a2[1]):
            continue
        yield a1, a2


def residue_verdict(om) -> Optional[bool]:
    """The residue test for ``(1, 1)``, or None when ``(1, 1)`` is not interior."""
    try:
        return ulrich_one_one(om)
    except Inapplicable:
        return None


def survey_row(instance: Instance, options: Optional[SemigroupOptions] = None) -> dict:
    """Compute one row of the survey table for an oriented pair of rays."""
    model = build(instance, options)
    om = orient(model)

    residue = residue_verdict(om)
    bottom_ulrich = is_ulrich_bottom(om)
    criterion = is_ulrich(om, om.bottom).ulrich
    gorenstein = is_gorenstein(model)
    by_determinants = h_star_count(om, 1) == 0 and h_star_count(om, 2) == 0
    # every planar semigroup is nearly Gorenstein
    nearly = is_nearly_gorenstein(model).nearly_gorenstein

    mismatch = (
        bottom_ulrich != criterion
        or (residue is not None and residue != bottom_ulrich)
        or gorenstein != by_determinants
        or not nearly
    )

    (x1, y1), (x2, y2) = om.a1, om.a2
    return {
        "x1": x1,
        "y1": y1,
        "x2": x2,
        "y2": y2,
        "gorenstein": gorenstein,
        "gorenstein_by_determinants": by_determinants,
        "ag1": is_ag(om, 1),
        "ag2": is_ag(om, 2),
        "bottom_ulrich": bottom_ulrich,
        "residue_verdict": residue,
        "nearly_gorenstein": nearly,
        "mismatch": mismatch,
    }


def survey(
    max_entry: int,
    require_ones_interior: bool = False,
    jobs: int = 1,
    options: Optional[SemigroupOptions] = None,
) -> pd.DataFrame:
    """Tabulate the classification of every oriented pair up to `max_entry`.

    Parameters
    ----------
    max_entry : int
        The bound on every ray coordinate.
    require_ones_interior : bool
        Restrict to cones with ``(1, 1)`` in their interior.
    jobs : int
        The number of worker processes. 1 runs in the calling process.
    options : Optional[SemigroupOptions]
        The enumeration budgets. If None, defaults are used.

    Returns
    -------
    pandas.DataFrame
        One row per instance with the columns in :data:`COLUMNS`, ordered by
        ``(x1, y1, x2, y2)``.

    """
    items = list(instances(max_entry, require_ones_interior))
    logger.info("surveying %d instances with entries up to %d", len(items), max_entry)

    rows = _run(functools.partial(survey_row, options=options), items, jobs)
    table = pd.DataFrame(rows, columns=COLUMNS)
    return _util.ensure_df(table.sort_values(COLUMNS[:4], ignore_index=True))


def summarize(table: pd.DataFrame) -> pd.Series:
    """Count the instances with each property in a survey table.

    Returns
    -------
    pandas.Series
        Indexed by ``instances`` followed by the boolean columns of the table.

    """
    flags = [
        "gorenstein",
        "ag1",
        "ag2",
        "bottom_ulrich",
        "nearly_gorenstein",
        "mismatch",
    ]
    counts = table[flags].astype(bool).sum().astype(int)
    return pd.concat([pd.Series({"instances": len(table)}), counts])


def instance_mismatches(
    instance: Instance, options: Optional[SemigroupOptions] = None
) -> List[Mismatch]:
    """Compare every fast path with its reference on one instance."""
    model = build(instance, options)
    om = orient(model)
    rays = [om.a1, om.a2]
    found = []

    def compare(check, fast, reference):
        _compare(found, instance, check, fast, reference)

    compare(
        "parallelotope",
        parallelotope_points(model.rays, model.options),
        _oracle.parallelotope_points_brute(model.rays.rays),
    )
    compare(
        "omega generators",
        list(model.omega_gens),
        _oracle.omega_generators_brute(model.rays.rays, model.hilbert_basis),
    )

    bound = model.rays.ray_sum
    compare(
        "hilbert basis generates",
        True,
        _oracle.closure_generates(
            model.hilbert_basis, _oracle.cone_points_brute(rays, bound), bound
        ),
    )

    for i, ray in ((1, om.a1), (2, om.a2)):
        points = h_star(om, i)
        compare(f"h_star {i}", set(points), _oracle.h_star_brute(om.bottom, ray))
        compare(f"h_star {i} count", h_star_count(om, i), len(points))
        compare(f"ag{i}", is_ag(om, i, "residues"), is_ag(om, i, "pairs"))

    for b in model.hilbert_basis:
        if b in rays:
            continue
        verdict = is_ulrich(om, b)
        compare(f"ulrich {b}", verdict.ulrich, _oracle.ulrich_pairwise_brute(om, b))
        compare(f"ulrich {b} basis pairs", verdict.basis_pairs, verdict.ulrich)

    bottom_ulrich = is_ulrich_bottom(om)
    compare("bottom ulrich", bottom_ulrich, is_ulrich(om, om.bottom).ulrich)

    if in_omega(model, (1, 1)):
        compare("ulrich (1,1)", ulrich_one_one(om), bottom_ulrich)

    if om.bottom == (1, 1) and om.x1 - om.y1 > 1:
        compare("h1 recursion", set(h1_star_recursive(om)), set(h_star(om, 1)))

    if nearly_fast_path(model):
        compare("nearly fast path", True, is_nearly_gorenstein(model).nearly_gorenstein)

    return found


def oracle_diff(
    max_entry: int, jobs: int = 1, options: Optional[SemigroupOptions] = None
) -> List[Mismatch]:
    """Run :func:`instance_mismatches` over every instance up to `max_entry`.

    Returns
    -------
    list of Mismatch
        Empty when every fast path agrees with its reference.

    """
    items = list(instances(max_entry))
    logger.info("cross-checking %d instances with entries up to %d", len(items), max_entry)

    per_instance = _run(functools.partial(instance_mismatches, options=options), items, jobs)
    return [m for found in per_instance for m in found]
