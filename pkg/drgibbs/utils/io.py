import json
import os
from fractions import Fraction

import numpy as np
import pandas as pd

from .conversions import fraction_to_str


def _default(obj):
    if isinstance(obj, Fraction):
        return fraction_to_str(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json(data, indent=None):
    """
    Serialise a result to JSON deterministically.

    Keys are sorted, Fractions become ``"p/q"`` strings and numpy scalars are
    converted to builtins, so identical results give identical text.

    Parameters
    ----------
    data : object
        Result object (dicts, lists, numbers, or objects with ``to_dict``)
    indent : int, optional
        Indentation for pretty printing, by default None

    Returns
    -------
    str
        JSON text
    """
    return json.dumps(data, default=_default, sort_keys=True, indent=indent)


def write_csv(data, output_path, columns=None):
    """
    Write tabular data to a CSV file.

    Parameters
    ----------
    data : pandas.DataFrame or sequence of records
        Table to write
    output_path : str
        Path to write the table to
    columns : list, optional
        Column names when ``data`` is a sequence of tuples, by default None

    Returns
    -------
    str
        Path to the written file
    """
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    frame = data if isinstance(data, pd.DataFrame) else pd.DataFrame(data, columns=columns)
    frame.to_csv(output_path, index=False)
    return output_path


def distance_frame(graph):
    """Return the distance matrix of a ConcreteGraph as a labelled DataFrame."""
    labels = [str(v) for v in graph.vertices]
    return pd.DataFrame(np.asarray(graph.distances), index=labels, columns=labels)


def write_distance_csv(graph, output_path):
    """
    Export the distance matrix of a ConcreteGraph as CSV.

    Parameters
    ----------
    graph : ConcreteGraph
        Graph whose pairwise distances are exported
    output_path : str
        Path to write the CSV file to

    Returns
    -------
    str
        Path to the written file
    """
    frame = distance_frame(graph).reset_index().rename(columns={"index": "vertex"})
    return write_csv(frame, output_path)
