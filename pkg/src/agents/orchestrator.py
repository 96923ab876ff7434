"""
Suite Orchestrator
Runs the verification agents and aggregates their messages.
"""

import logging
import time
from typing import Any, Dict, List, Optional, Type

from .base_agent import AgentMessage, BaseAgent
from .covariant_dimension_agent import CovariantDimensionAgent
from .divisor_agent import DivisorAgent
from .intermediate_level_agent import IntermediateLevelAgent
from .nu_pipeline_agent import NuPipelineAgent
from .property_agent import PropertyAgent
from .symmetry_agent import SymmetryAgent
from .theta_identity_agent import ThetaIdentityAgent
from .valuation_agent import ValuationAgent

logger = logging.getLogger(__name__)

# Cheap suites first; the nu suite dominates the runtime.
SUITE_AGENTS: Dict[str, Type[BaseAgent]] = {
    agent.suite: agent for agent in (
        ThetaIdentityAgent,
        DivisorAgent,
        CovariantDimensionAgent,
        ValuationAgent,
        SymmetryAgent,
        IntermediateLevelAgent,
        PropertyAgent,
        NuPipelineAgent,
    )
}


def suite_names() -> List[str]:
    return list(SUITE_AGENTS)


class SuiteOrchestrator:
    """Orchestrates the verification suites."""

    def __init__(self, options: Optional[Dict[str, Any]] = None):
        """
        Initialize orchestrator.

        Args:
            options: Extra input passed to every agent (seed, trials, stretch, ...)
        """
        self.options = dict(options or {})
        self.agent_messages: List[AgentMessage] = []

    def _agent(self, name: str) -> BaseAgent:
        if name not in SUITE_AGENTS:
            raise ValueError(f"Unknown suite: {name}. Available: {', '.join(SUITE_AGENTS)}")
        return SUITE_AGENTS[name]()

    def run_suite(self, name: str, N: int) -> Dict[str, Any]:
        """
        Run one suite.

        Args:
            name: Suite name, see suite_names()
            N: Box size

        Returns:
            Dictionary with the agent messages, an overall pass flag and pipeline metadata

        Raises:
            ValueError: For unknown suites
        """
        return self._run([name], N)

    def run_all(self, N: int) -> Dict[str, Any]:
        """Run every suite in order."""
        return self._run(suite_names(), N)

    def _run(self, names: List[str], N: int) -> Dict[str, Any]:
        agents = [self._agent(name) for name in names]
        self.agent_messages = []
        start_time = time.time()
        context: Dict[str, Any] = {}
        for agent in agents:
            logger.info("Running suite %s at box %d", agent.suite, N)
            message = agent.process({**self.options, 'N': N}, context)
            self.agent_messages.append(message)
            context[agent.suite] = message.output
            logger.info("Suite %s: %s", agent.suite, message.reasoning)
        elapsed_time = time.time() - start_time

        return {
            'suites': names,
            'passed': all(msg.passed for msg in self.agent_messages),
            'agent_messages': [msg.to_dict() for msg in self.agent_messages],
            'failed_checks': self.failed_checks(),
            'pipeline_metadata': {
                'box': N,
                'elapsed_time': round(elapsed_time, 2),
                'agent_count': len(self.agent_messages),
                'check_count': sum(len(msg.output['checks']) for msg in self.agent_messages),
            },
        }

    def failed_checks(self) -> Dict[str, List[str]]:
        """Names of the failed checks, per agent."""
        failed = {}
        for msg in self.agent_messages:
            names = [c['name'] for c in msg.output['checks'] if not c['passed']]
            if names:
                failed[msg.agent] = names
        return failed

    def get_agent_reasoning(self) -> Dict[str, str]:
        """Get reasoning from all agents."""
        return {msg.agent: msg.reasoning for msg in self.agent_messages if msg.reasoning}
