"""Private helper utilities."""

from fractions import Fraction

import pandas as pd

from .core import MalformedDocument


def in_jupyter_notebook() -> bool:
    """Determine if the code is being run in a Jupyter notebook."""
    try:
        shell = get_ipython().__class__.__name__  # pyright: ignore
        return shell == "ZMQInteractiveShell"
    except NameError:
        return False


def parse_vector(text: str) -> tuple:
    """Parse ``"x,y,..."`` into a tuple of integers."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise MalformedDocument(f"Cannot read {text!r} as a comma-separated integer vector.")


def format_rational(x: Fraction) -> str:
    """Write an exact rational as ``"p/q"``, or ``"p"`` when it is an integer."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def ensure_df(x) -> pd.DataFrame:
    """Helps convince the type checker that a variable is a DataFrame."""
    assert isinstance(x, pd.DataFrame)
    return x
