"""Classification reports: every verdict about one semigroup in one place."""

import dataclasses
import textwrap as _textwrap
import time as _time
from typing import Dict, List, Optional, Sequence, Tuple

from . import _util
from .core import (
    IntVector,
    MalformedDocument,
    SemigroupOptions,
    SlimVerdict,
    build,
    bottom_element,
    is_gorenstein,
    is_slim,
    minimal_omega_elements,
)
from .planar import (
    HStarSet,
    QuickFilters,
    SearchKind,
    SearchResult,
    find_ulrich,
    h_star,
    h_star_count,
    is_ag,
    is_ulrich,
    is_ulrich_bottom,
    orient,
    quick_filters,
)
from .trace import is_nearly_gorenstein

NOTE_CHANNELS = ("slim", "bottom", "ulrich", "trace")
"""The channels of :attr:`ClassificationReport.notes`, in display order."""


@dataclasses.dataclass(frozen=True)
class PlanarReport:
    """The verdicts that only exist for semigroups in the plane."""

    a1: IntVector
    a2: IntVector
    h_star_1: HStarSet
    h_star_2: HStarSet
    h_star_1_count: int
    h_star_2_count: int
    ag1: bool
    ag2: bool
    bottom_ulrich: bool
    ulrich_elements: SearchResult
    quick_filters: QuickFilters

    @property
    def almost_gorenstein(self) -> bool:
        """Whether the semigroup has an Ulrich element."""
        return self.ulrich_elements.found


@dataclasses.dataclass
class ClassificationReport:
    """Everything :func:`analyze` determined about a semigroup.

    Attributes
    ----------
    rays : tuple of IntVector
        The rays, in the order given.
    determinant : int
        The absolute determinant of the rays.
    hilbert_basis : tuple of IntVector
    omega_generators : tuple of IntVector
    slim : SlimVerdict
    bottom : Optional[IntVector]
    minimal_omega_elements : list of IntVector
    gorenstein : bool
    nearly_gorenstein : bool
    trace_failures : list of IntVector
        The basis elements outside the trace of the canonical ideal.
    planar : Optional[PlanarReport]
        None unless the semigroup lives in the plane.
    notes : dict
        Human-readable remarks, keyed by channel. See :data:`NOTE_CHANNELS`.
    timing_ms : Optional[float]
        Wall-clock time of the analysis in milliseconds, when requested.

    """

    rays: Tuple[IntVector, ...]
    determinant: int
    hilbert_basis: Tuple[IntVector, ...]
    omega_generators: Tuple[IntVector, ...]
    slim: SlimVerdict
    bottom: Optional[IntVector]
    minimal_omega_elements: List[IntVector]
    gorenstein: bool
    nearly_gorenstein: bool
    trace_failures: List[IntVector]
    planar: Optional[PlanarReport] = None
    notes: Dict[str, List[str]] = dataclasses.field(default_factory=dict)
    timing_ms: Optional[float] = None

    def add_note(self, channel: str, message: str):
        if channel not in NOTE_CHANNELS:
            raise ValueError(f"Unknown note channel {channel!r}.")
        self.notes.setdefault(channel, []).append(message)

    @property
    def almost_gorenstein(self) -> Optional[bool]:
        """Whether an Ulrich element exists; None outside the plane."""
        if self.planar is None:
            return None
        return self.planar.almost_gorenstein


# private helpers ======================================================================


def _points(points) -> list:
    return [list(p) for p in points]


def _optional_point(p):
    return None if p is None else list(p)


def _planar_report(model) -> PlanarReport:
    om = orient(model)
    return PlanarReport(
        a1=om.a1,
        a2=om.a2,
        h_star_1=h_star(om, 1),
        h_star_2=h_star(om, 2),
        h_star_1_count=h_star_count(om, 1),
        h_star_2_count=h_star_count(om, 2),
        ag1=is_ag(om, 1),
        ag2=is_ag(om, 2),
        bottom_ulrich=is_ulrich_bottom(om),
        ulrich_elements=find_ulrich(om),
        quick_filters=quick_filters(om),
    )


def _write_notes(report: ClassificationReport):
    slim = report.slim
    if not slim.slim:
        report.add_note(
            "slim",
            f"basis element {slim.witness} lies on the boundary with coordinate sum "
            f"{_util.format_rational(slim.witness_sum)}",
        )

    if report.bottom is None:
        report.add_note(
            "bottom",
            f"no bottom element; the minimal interior elements are "
            f"{', '.join(str(p) for p in report.minimal_omega_elements)}",
        )

    if report.planar is not None:
        search = report.planar.ulrich_elements
        if search.kind is SearchKind.ALL_OF_OMEGA:
            report.add_note("ulrich", "criterion holds for every interior element")
        elif not search.elements:
            report.add_note("ulrich", "no Ulrich element exists")

    if report.trace_failures:
        report.add_note(
            "trace",
            f"basis elements outside the trace: "
            f"{', '.join(str(p) for p in report.trace_failures)}",
        )


def _parse_rays(document) -> list:
    if not isinstance(document, dict) or "rays" not in document:
        raise MalformedDocument('The document must be an object with a "rays" field.')
    rays = document["rays"]
    if not isinstance(rays, list) or not all(isinstance(r, list) for r in rays):
        raise MalformedDocument('The "rays" field must be a list of integer vectors.')
    for ray in rays:
        for c in ray:
            if isinstance(c, bool) or not isinstance(c, int):
                raise MalformedDocument(f"Ray coordinate {c!r} is not an integer.")
    return [tuple(r) for r in rays]


# public functions =====================================================================


def analyze(
    rays: Sequence[Sequence[int]],
    options: Optional[SemigroupOptions] = None,
    timing: bool = False,
) -> ClassificationReport:
    """Build the semigroup and compute every verdict about it.

    Parameters
    ----------
    rays : Sequence[Sequence[int]]
        The extremal rays.
    options : Optional[SemigroupOptions]
        The enumeration budgets. If None, defaults are used.
    timing : bool
        Whether to record the elapsed time. Off by default so that repeated
        runs produce identical reports.

    Returns
    -------
    ClassificationReport

    Raises
    ------
    InvalidRays
        If the rays do not define a simplicial semigroup.
    LimitExceeded
        If an enumeration exceeds its budget.

    """
    start = _time.perf_counter()

    model = build(rays, options)
    trace = is_nearly_gorenstein(model)

    report = ClassificationReport(
        rays=model.rays.rays,
        determinant=model.det_abs,
        hilbert_basis=model.hilbert_basis,
        omega_generators=model.omega_gens,
        slim=is_slim(model),
        bottom=bottom_element(model),
        minimal_omega_elements=minimal_omega_elements(model),
        gorenstein=is_gorenstein(model),
        nearly_gorenstein=trace.nearly_gorenstein,
        trace_failures=trace.failures,
        planar=_planar_report(model) if model.dim == 2 else None,
    )
    _write_notes(report)

    if timing:
        report.timing_ms = (_time.perf_counter() - start) * 1000
    return report


def to_document(report: ClassificationReport) -> dict:
    """Convert a report into plain dicts, lists, integers and strings.

    The field names are documented in the user guide and are stable. Rational
    values are written as ``"p/q"`` strings.

    """
    slim = report.slim
    doc = {
        "rays": _points(report.rays),
        "determinant": report.determinant,
        "hilbert_basis": _points(report.hilbert_basis),
        "omega_generators": _points(report.omega_generators),
        "slim": slim.slim,
        "slim_witness": _optional_point(slim.witness),
        "slim_witness_sum": (
            None if slim.witness_sum is None else _util.format_rational(slim.witness_sum)
        ),
        "bottom": _optional_point(report.bottom),
        "minimal_omega_elements": _points(report.minimal_omega_elements),
        "gorenstein": report.gorenstein,
        "nearly_gorenstein": report.nearly_gorenstein,
        "trace_failures": _points(report.trace_failures),
        "almost_gorenstein": report.almost_gorenstein,
        "planar": None,
        "notes": {c: list(report.notes[c]) for c in NOTE_CHANNELS if c in report.notes},
    }

    p = report.planar
    if p is not None:
        doc["planar"] = {
            "a1": list(p.a1),
            "a2": list(p.a2),
            "h_star_1": _points(p.h_star_1),
            "h_star_1_count": p.h_star_1_count,
            "h_star_2": _points(p.h_star_2),
            "h_star_2_count": p.h_star_2_count,
            "ag1": p.ag1,
            "ag2": p.ag2,
            "bottom_ulrich": p.bottom_ulrich,
            "ulrich_elements": {
                "kind": p.ulrich_elements.kind.value,
                "elements": _points(p.ulrich_elements.elements),
            },
            "quick_filters": dataclasses.asdict(p.quick_filters),
        }

    if report.timing_ms is not None:
        doc["timing_ms"] = report.timing_ms

    return doc


def render_text(report: ClassificationReport) -> str:
    """A human-readable summary of the report."""

    def fmt(points):
        return ", ".join(str(tuple(p)) for p in points) or "(none)"

    def yes(flag):
        return "yes" if flag else "no"

    parts = [
        _textwrap.dedent(
            f"""\
            rays:                {fmt(report.rays)}
            determinant:         {report.determinant}
            Hilbert basis:       {fmt(report.hilbert_basis)}
            interior generators: {fmt(report.omega_generators)}
            bottom element:      {report.bottom if report.bottom is not None else "(none)"}
            slim:                {yes(report.slim.slim)}
            Gorenstein:          {yes(report.gorenstein)}
            nearly Gorenstein:   {yes(report.nearly_gorenstein)}
            """
        )
    ]

    p = report.planar
    if p is not None:
        search = p.ulrich_elements
        if search.kind is SearchKind.ALL_OF_OMEGA:
            ulrich = "every interior element"
        else:
            ulrich = fmt(search.elements)
        parts.append(
            _textwrap.dedent(
                f"""\
                oriented rays:       a1 = {p.a1}, a2 = {p.a2}
                H_1^*:               {fmt(p.h_star_1)} ({p.h_star_1_count} points)
                H_2^*:               {fmt(p.h_star_2)} ({p.h_star_2_count} points)
                AG1, AG2:            {yes(p.ag1)}, {yes(p.ag2)}
                bottom is Ulrich:    {yes(p.bottom_ulrich)}
                Ulrich elements:     {ulrich}
                almost Gorenstein:   {yes(p.almost_gorenstein)}
                """
            )
        )

    for channel in NOTE_CHANNELS:
        for message in report.notes.get(channel, []):
            parts.append(f"note [{channel}]: {message}\n")

    if report.timing_ms is not None:
        parts.append(f"elapsed: {report.timing_ms:.1f} ms\n")

    return "".join(parts)


def validate_document(
    document: dict, options: Optional[SemigroupOptions] = None
) -> List[str]:
    """Recompute a report document from its rays and list every disagreement.

    The timing field is ignored. Each listed Ulrich element is also rechecked
    with :func:`semigrouplib.planar.is_ulrich`.

    Returns
    -------
    list of str
        One message per field that differs. Empty when the document is sound.

    Raises
    ------
    MalformedDocument
        If the document has no usable ``rays`` field.

    """
    rays = _parse_rays(document)
    fresh = analyze(rays, options)
    expected = to_document(fresh)

    problems = []
    for key, value in expected.items():
        if document.get(key) != value:
            problems.append(f"field {key!r}: expected {value!r}, found {document.get(key)!r}")

    if fresh.planar is not None:
        om = orient(build(rays, options))
        for element in fresh.planar.ulrich_elements.elements:
            if not is_ulrich(om, element).ulrich:
                problems.append(f"listed Ulrich element {element} fails the criterion")

    return problems


def rays_from_document(document) -> list:
    """Extract the rays from an input document of the form ``{"rays": [...]}``.

    Raises
    ------
    MalformedDocument
        If the field is missing or is not a list of integer lists.

    """
    return _parse_rays(document)
