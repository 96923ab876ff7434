"""
Verification suites
One agent per suite, driven by the SuiteOrchestrator.
"""

from .base_agent import AgentMessage, BaseAgent, CheckResult
from .covariant_dimension_agent import CovariantDimensionAgent
from .divisor_agent import DivisorAgent
from .intermediate_level_agent import IntermediateLevelAgent
from .nu_pipeline_agent import NuPipelineAgent
from .orchestrator import SUITE_AGENTS, SuiteOrchestrator, suite_names
from .property_agent import PropertyAgent
from .symmetry_agent import SymmetryAgent
from .theta_identity_agent import ThetaIdentityAgent
from .valuation_agent import ValuationAgent

__all__ = [
    'AgentMessage',
    'BaseAgent',
    'CheckResult',
    'CovariantDimensionAgent',
    'DivisorAgent',
    'IntermediateLevelAgent',
    'NuPipelineAgent',
    'PropertyAgent',
    'SymmetryAgent',
    'ThetaIdentityAgent',
    'ValuationAgent',
    'SUITE_AGENTS',
    'SuiteOrchestrator',
    'suite_names',
]
