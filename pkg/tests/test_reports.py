import json

import pytest

from src.catalog import named_covariant
from src.exact_core import gauss
from src.reports import (
    coefficient_table,
    decomposition_table,
    dimension_table,
    render,
    series_frame,
    suite_frame,
    valuation_frame,
)
from src.symmetry import DecompositionEntry
from src.theta import even_theta
from src.valuation import valuation_table


def test_dimension_table():
    df = dimension_table([(1, 0), (1, 2), (4, 0)])
    assert df['dim'].tolist() == [5, 9, 65]
    assert df['basis_size'].tolist()[:2] == [5, 9]
    assert df['basis_size'].isna().tolist()[2]
    assert "basis_size" not in dimension_table([(1, 0)], with_basis=False).columns


def test_render_formats():
    df = dimension_table([(1, 0)], with_basis=False)
    assert render(df, "csv").splitlines() == ["d,b,dim", "1,0,5"]
    assert json.loads(render(df, "json")) == [{'d': 1, 'b': 0, 'dim': 5}]
    with pytest.raises(ValueError):
        render(df, "xml")


def test_decomposition_table():
    df = decomposition_table([DecompositionEntry((4, 2), 1, 9)])
    assert df.to_dict(orient="records") == [{'partition': "s[4,2]", 'multiplicity': 1, 'dimension': 9}]


def test_valuation_frame():
    df = valuation_frame(valuation_table(named_covariant("C1_6")))
    assert len(df) == 10
    assert list(df.columns) == ['partition', 'P0', 'P1', 'P2', 'P3', 'P4', 'P5', 'P6', 'min']
    assert set(df['min']) == {-1}


def test_coefficient_table():
    df = coefficient_table([gauss(1, 2), gauss(0, -1)], "(1,1,1)")
    assert df['value'].tolist() == ["1+2i", "-i"]
    assert df['re'].tolist() == ["1", "0"]
    assert set(df['index']) == {"(1,1,1)"}


def test_series_frame():
    df = series_frame(even_theta(1, 4))
    assert len(df) == 5
    assert df.iloc[0].to_dict() == {'e1': 0, 'e12': 0, 'e2': 0, 're': "1", 'im': "0"}


def test_suite_frame():
    messages = [{'agent': "Divisors", 'passed': True, 'reasoning': "10/10 checks passed"}]
    assert suite_frame(messages)['agent'].tolist() == ["Divisors"]
