"""Read and write the documents exchanged by the command-line tool.

Input documents are JSON objects with a single required field, ``rays``, a
list of integer vectors::

    {"rays": [[11, 2], [31, 6]]}

Reports are JSON objects whose fields are listed in the user guide. Survey
tables are written as CSV with a fixed header row. Integers of any size are
written in decimal without loss.

"""

import json as _json
import pathlib as _pathlib
import sys as _sys
from typing import Union

import pandas as _pd

from ..core import MalformedDocument
from ..reports import rays_from_document

PathLike = Union[str, _pathlib.Path]


def _load(path: PathLike):
    try:
        if str(path) == "-":
            return _json.load(_sys.stdin)
        with _pathlib.Path(path).open() as fileobj:
            return _json.load(fileobj)
    except _json.JSONDecodeError as exc:
        raise MalformedDocument(f"{path} is not valid JSON: {exc}") from exc
    except OSError as exc:
        raise MalformedDocument(f"Cannot read {path}: {exc}") from exc


def read_rays(path: PathLike) -> list:
    """Reads the rays from an input document.

    Parameters
    ----------
    path : pathlib.Path or str
        The path of the document, or ``"-"`` for standard input.

    Returns
    -------
    list of tuple
        The rays, in the order given.

    Raises
    ------
    MalformedDocument
        If the file cannot be read, is not JSON, or has no valid ``rays`` field.

    """
    return rays_from_document(_load(path))


def read_report(path: PathLike) -> dict:
    """Reads a report document written by :func:`write_report`."""
    document = _load(path)
    if not isinstance(document, dict):
        raise MalformedDocument(f"{path} does not contain a report object.")
    return document


def dumps(document: dict) -> str:
    """Serialize a document with a fixed layout, ending in a newline."""
    return _json.dumps(document, indent=2) + "\n"


def write_report(path: PathLike, document: dict):
    """Writes a report document to disk.

    Parameters
    ----------
    path : pathlib.Path or str
        Where the report will be written.
    document : dict
        The output of :func:`semigrouplib.reports.to_document`.

    """
    path = _pathlib.Path(path)
    with path.open("w") as fileobj:
        fileobj.write(dumps(document))


def write_csv(path_or_buffer, table: _pd.DataFrame):
    """Writes a table as CSV with its header row and without the index."""
    table.to_csv(path_or_buffer, index=False)
