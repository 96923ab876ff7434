"""
Taut Workbench
Siegel modular forms of degree two from covariants of six binary linear forms.
"""

from .catalog import named_covariant
from .config import Settings, load_settings
from .covariants import Covariant, GenericCovariant, transvectant
from .divisors import divisor_to_form
from .nu_bridge import FourierIndex, MeroForm, nu_eval, reduce
from .parser import evaluate, parse
from .series import FourierSeries, series_div, series_mul
from .valuation import v_pi, valuation_table
from .workbench import NuResult, Workbench

__all__ = [
    'named_covariant',
    'Settings',
    'load_settings',
    'Covariant',
    'GenericCovariant',
    'transvectant',
    'divisor_to_form',
    'FourierIndex',
    'MeroForm',
    'nu_eval',
    'reduce',
    'evaluate',
    'parse',
    'FourierSeries',
    'series_div',
    'series_mul',
    'v_pi',
    'valuation_table',
    'NuResult',
    'Workbench'
]
