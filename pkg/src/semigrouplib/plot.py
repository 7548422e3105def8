import numpy as np

import bokeh.io
import bokeh.models
import bokeh.plotting

from ._util import in_jupyter_notebook as _in_jupyter_notebook
from .core import contains
from .planar import OrientedModel, SearchKind, find_ulrich, h_star

# semigroup_figure ---------------------------------------------------------------------


def _lattice_points(om: OrientedModel, extent: int) -> np.ndarray:
    grid = np.array(
        [(x, y) for x in range(extent + 1) for y in range(extent + 1)], dtype=object
    )
    keep = [contains(om.base, p) for p in grid]
    return grid[np.array(keep, dtype=bool)]


def _plot_points(fig, points, label, **style) -> bokeh.models.GlyphRenderer:
    points = np.array(list(points), dtype=float).reshape(-1, 2)
    source = bokeh.models.ColumnDataSource(
        {"x": points[:, 0], "y": points[:, 1], "role": [label] * len(points)}
    )
    return fig.scatter("x", "y", source=source, legend_label=label, **style)


def _plot_rays(fig, om: OrientedModel, extent: int):
    for ray in (om.a1, om.a2):
        scale = extent / max(ray)
        fig.line([0, ray[0] * scale], [0, ray[1] * scale], color="black", line_width=2)


def _plot_parallelogram(fig, om: OrientedModel) -> bokeh.models.GlyphRenderer:
    corners = [(0, 0), om.a1, (om.a1[0] + om.a2[0], om.a1[1] + om.a2[1]), om.a2]
    source = bokeh.models.ColumnDataSource(
        {
            "xs": [[float(x) for x, _ in corners]],
            "ys": [[float(y) for _, y in corners]],
            "role": ["parallelogram"],
        }
    )
    return fig.patches(
        "xs",
        "ys",
        source=source,
        fill_color="lightblue",
        fill_alpha=0.3,
        line_color="steelblue",
        legend_label="parallelogram",
    )


def semigroup_figure(om: OrientedModel, extent=None):
    """Draw a planar semigroup and its distinguished elements.

    The lattice points of the cone are drawn in grey over the shaded
    parallelogram spanned by the two rays. The Hilbert basis, the
    interior generators, the bottom element, the two sets ``H_1^*`` and
    ``H_2^*`` and any Ulrich elements found by the search are highlighted.

    Parameters
    ----------
    om : OrientedModel
        The oriented planar semigroup.
    extent : Optional[int]
        The largest coordinate shown. Default: the largest coordinate of
        ``a_1 + a_2``.

    Returns
    -------
    bokeh.plotting.figure

    """
    if extent is None:
        extent = max(om.a1[0] + om.a2[0], om.a1[1] + om.a2[1])

    fig = bokeh.plotting.figure(
        title=f"Semigroup with rays {om.a1} and {om.a2}",
        min_width=600,
        min_height=600,
        x_range=[-0.5, extent + 0.5],
        y_range=[-0.5, extent + 0.5],
        tools="hover,pan,box_zoom,save,reset,help",
        match_aspect=True,
    )

    _plot_parallelogram(fig, om)
    _plot_rays(fig, om, extent)
    _plot_points(fig, _lattice_points(om, extent), "H", color="lightgrey", size=5)
    _plot_points(fig, om.base.hilbert_basis, "Hilbert basis", color="navy", size=10)
    _plot_points(
        fig, om.base.omega_gens, "interior generators", color="orange", size=7
    )
    _plot_points(fig, h_star(om, 1), "H_1^*", color="green", marker="square", size=7)
    _plot_points(fig, h_star(om, 2), "H_2^*", color="purple", marker="square", size=7)
    _plot_points(fig, [om.bottom], "bottom", color="red", marker="diamond", size=14)

    search = find_ulrich(om)
    if search.kind is SearchKind.FINITE_SET and search.elements:
        _plot_points(
            fig, search.elements, "Ulrich", color="red", marker="star", size=16
        )

    fig.hover.tooltips = [("point", "(@x, @y)"), ("role", "@role")]
    fig.legend.location = "top_left"
    fig.legend.click_policy = "hide"
    return fig


def show_semigroup(om: OrientedModel, extent=None):
    """Display :func:`semigroup_figure`, inline when running in a notebook."""
    if _in_jupyter_notebook():
        bokeh.io.output_notebook()
    bokeh.io.show(semigroup_figure(om, extent))
