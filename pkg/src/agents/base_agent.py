"""
Base Agent Class for the verification suites
Defines the message format and the check-running helpers shared by all suite agents.
"""

import json
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..config import load_settings
from ..errors import WorkbenchError

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, Any]


@dataclass
class CheckResult:
    """Outcome of one named check."""
    name: str
    passed: bool
    detail: Any = None
    elapsed: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class AgentMessage:
    """Structured message format for agent communication."""
    agent: str
    output: Dict[str, Any]
    passed: bool
    reasoning: Optional[str] = None
    evidence: Optional[List[str]] = None
    timestamp: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)

    def to_json(self) -> str:
        """Convert to JSON string."""
        return json.dumps(self.to_dict(), indent=2, default=str)


class BaseAgent(ABC):
    """Base class for all verification suite agents."""

    suite = ""

    def __init__(self, agent_name: str):
        """
        Initialize agent.

        Args:
            agent_name: Unique identifier for this agent
        """
        self.agent_name = agent_name

    @abstractmethod
    def process(
        self,
        input_data: Dict[str, Any],
        context: Optional[Dict[str, Any]] = None
    ) -> AgentMessage:
        """
        Run the suite.

        Args:
            input_data: Dictionary with at least the box size 'N'
            context: Optional results of earlier agents

        Returns:
            AgentMessage with one entry per check
        """
        pass

    def run_check(self, name: str, check: Callable[[], CheckOutcome]) -> CheckResult:
        """
        Run one check; workbench errors count as failures with their message as detail.
        """
        start = time.time()
        try:
            passed, detail = check()
        except WorkbenchError as exc:
            logger.info("%s/%s raised %s", self.agent_name, name, exc)
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = round(time.time() - start, 3)
        logger.info("%s/%s: %s (%.3fs)", self.agent_name, name, "ok" if passed else "FAILED", elapsed)
        return CheckResult(name, bool(passed), detail, elapsed)

    def run_checks(self, checks: List[Tuple[str, Callable[[], CheckOutcome]]]) -> List[CheckResult]:
        return [self.run_check(name, check) for name, check in checks]

    def create_message(self, results: List[CheckResult], reasoning: Optional[str] = None) -> AgentMessage:
        """
        Create structured agent message.

        Args:
            results: Check results
            reasoning: Summary; a default one counting failures is used when None

        Returns:
            AgentMessage instance
        """
        failed = [r.name for r in results if not r.passed]
        if reasoning is None:
            reasoning = (f"{len(results)} checks passed" if not failed
                         else f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}")
        return AgentMessage(
            agent=self.agent_name,
            output={'checks': [r.to_dict() for r in results]},
            passed=not failed,
            reasoning=reasoning,
            evidence=[r.name for r in results if r.passed],
            timestamp=datetime.now(timezone.utc).isoformat(),
        )


def box_of(input_data: Dict[str, Any], default: Optional[int] = None) -> int:
    """Box size requested by the caller, else `default`, else TAUT_DEFAULT_BOX."""
    if 'N' in input_data:
        N = int(input_data['N'])
    elif default is not None:
        N = default
    else:
        N = load_settings().default_box
    if N < 0:
        raise ValueError(f"Box size must be non-negative, got {N}")
    return N
