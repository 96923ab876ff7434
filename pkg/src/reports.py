"""
Reports
Tabular views of workbench results, rendered as CSV or JSON records.
"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from .errors import TooLarge
from .exact_core import GaussRat, gauss_parts, gauss_to_str
from .series import FourierSeries
from .spaces import dim_graded, space_basis
from .symmetry import DecompositionEntry
from .valuation import ValuationReport

FORMATS = ("csv", "json")


def render(df: pd.DataFrame, fmt: str = "json") -> str:
    """
    Render a table.

    Raises:
        ValueError: For formats other than csv and json
    """
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "json":
        return json.dumps(df.to_dict(orient="records"), indent=2)
    raise ValueError(f"Unsupported format: {fmt}. Supported: {', '.join(FORMATS)}")


def dimension_table(gradings: Sequence[tuple], with_basis: bool = True) -> pd.DataFrame:
    """dim C'_{d,b} from the generating function and, when small enough, from an explicit basis."""
    rows = []
    for d, b in gradings:
        row = {'d': d, 'b': b, 'dim': dim_graded(d, b)}
        if with_basis:
            try:
                row['basis_size'] = len(space_basis(d, b))
            except TooLarge:
                row['basis_size'] = None
        rows.append(row)
    return pd.DataFrame(rows)


def decomposition_table(entries: Sequence[DecompositionEntry]) -> pd.DataFrame:
    rows = [entry.to_dict() for entry in entries]
    return pd.DataFrame(rows, columns=['partition', 'multiplicity', 'dimension'])


def valuation_frame(reports: Sequence[ValuationReport]) -> pd.DataFrame:
    """One row per partition, one column per x-coefficient, plus the minimum."""
    rows = []
    for report in reports:
        data = report.to_dict()
        row: Dict[str, Any] = {'partition': data['partition']}
        for j, value in enumerate(data['values']):
            row[f"P{j}"] = value
        row['min'] = data['aggregate']
        rows.append(row)
    return pd.DataFrame(rows)


def coefficient_table(vector: Sequence[GaussRat], label: str = "") -> pd.DataFrame:
    """Components of a vector-valued Fourier coefficient as exact strings."""
    rows = []
    for j, value in enumerate(vector):
        re, im = gauss_parts(value)
        rows.append({'index': label, 'component': j, 're': str(re), 'im': str(im),
                     'value': gauss_to_str(value)})
    return pd.DataFrame(rows)


def series_frame(series: FourierSeries) -> pd.DataFrame:
    rows = []
    for e in series.support():
        re, im = gauss_parts(series.coefficient(e))
        rows.append({'e1': e[0], 'e12': e[1], 'e2': e[2], 're': str(re), 'im': str(im)})
    return pd.DataFrame(rows, columns=['e1', 'e12', 'e2', 're', 'im'])


def suite_frame(messages: List[Dict[str, Any]]) -> pd.DataFrame:
    """Summary of agent messages: one row per agent."""
    rows = [{'agent': m['agent'], 'passed': m['passed'], 'reasoning': m['reasoning']} for m in messages]
    return pd.DataFrame(rows, columns=['agent', 'passed', 'reasoning'])
