import pytest

from src.agents import (
    CovariantDimensionAgent,
    DivisorAgent,
    IntermediateLevelAgent,
    NuPipelineAgent,
    PropertyAgent,
    SuiteOrchestrator,
    SymmetryAgent,
    ThetaIdentityAgent,
    ValuationAgent,
    suite_names,
)
from src.agents.base_agent import AgentMessage, BaseAgent, box_of
from src.agents.nu_pipeline_agent import (
    WEIGHT_6_4_TARGETS,
    holomorphic_image,
    sextic_gradient_form,
    weight_6_4_forms,
)
from src.catalog import named_covariant
from src.covariants import i5
from src.errors import OutOfBox
from src.exact_core import as_gauss
from src.nu_bridge import FourierIndex, match_coefficients, proportionality_constant


class _FailingAgent(BaseAgent):
    suite = "failing"

    def __init__(self):
        super().__init__("Failing")

    def process(self, input_data, context=None) -> AgentMessage:
        return self.create_message(self.run_checks([
            ("holds", lambda: (True, None)),
            ("raises", self._raise),
        ]))

    def _raise(self):
        raise OutOfBox("index needs box 8")


def _checks(message):
    return {c['name']: c for c in message.output['checks']}


def test_suite_order():
    assert suite_names() == [
        "identities", "divisors", "dimensions", "valuations",
        "symmetry", "levels", "properties", "nu",
    ]


def test_workbench_errors_fail_the_check():
    message = _FailingAgent().process({'N': 4})
    assert not message.passed
    checks = _checks(message)
    assert checks['holds']['passed']
    assert checks['raises']['detail'] == "OutOfBox: index needs box 8"
    assert message.reasoning == "1 of 2 checks failed: raises"
    assert message.evidence == ["holds"]


def test_box_of(clean_env):
    assert box_of({}) == 12
    assert box_of({'N': "6"}) == 6
    with pytest.raises(ValueError):
        box_of({'N': -1})


def test_box_of_uses_the_configured_default(clean_env):
    clean_env.setenv("TAUT_DEFAULT_BOX", "7")
    assert box_of({}) == 7
    assert box_of({}, default=8) == 8
    assert box_of({'N': 5}) == 5


def test_divisor_agent():
    message = DivisorAgent().process({'N': 4})
    assert message.passed, message.reasoning
    assert len(message.output['checks']) == 10


@pytest.mark.slow
@pytest.mark.parametrize("agent, N, count", [
    (ThetaIdentityAgent, 12, 8),
    (CovariantDimensionAgent, 12, 11),
    (ValuationAgent, 12, 15),
    (SymmetryAgent, 12, 13),
    (IntermediateLevelAgent, 12, 8),
    (NuPipelineAgent, 12, 10),
])
def test_every_check_passes(agent, N, count):
    message = agent().process({'N': N})
    assert message.passed, message.reasoning
    assert message.reasoning == f"{count} checks passed"


@pytest.mark.slow
def test_discriminant_check_records_the_sign_product():
    message = ThetaIdentityAgent().process({'N': 8})
    check = _checks(message)['discriminant']
    assert check['passed']
    assert check['detail']['sign_product'] == -1


@pytest.mark.slow
def test_gamma0_routes_are_proportional():
    message = IntermediateLevelAgent().process({'N': 8})
    checks = _checks(message)
    assert checks['quadric_identity']['passed']
    assert checks['quadric_identity']['detail'] == {'coefficient': 2}
    assert checks['gamma0_routes']['passed']
    assert all(v is not None for v in checks['gamma0_routes']['detail'].values())


@pytest.mark.slow
def test_sextic_gradient_scalar():
    N = 8
    F = holomorphic_image(i5() * named_covariant("C1_6"), N).materialized()
    scalar = proportionality_constant(F.components, sextic_gradient_form(N).components)
    assert scalar == as_gauss(-(2 ** 36))


@pytest.mark.slow
def test_weight_6_4_coefficients():
    assert WEIGHT_6_4_TARGETS[FourierIndex.of(1, 1, 1)] == (0, 0, 1, 2, 1, 0, 0)
    assert WEIGHT_6_4_TARGETS[FourierIndex.of(3, 3, 3)] == (-36, -108, 3, 186, 3, -108, -36)
    match = match_coefficients(weight_6_4_forms(12), WEIGHT_6_4_TARGETS)
    assert match.matched
    assert match.scalar is not None


def test_orchestrator_runs_one_suite():
    orchestrator = SuiteOrchestrator()
    results = orchestrator.run_suite("divisors", 4)
    assert results['passed']
    assert results['suites'] == ["divisors"]
    assert results['failed_checks'] == {}
    assert results['pipeline_metadata']['check_count'] == 10
    assert results['agent_messages'][0]['agent'] == "Divisors"
    assert orchestrator.get_agent_reasoning() == {"Divisors": "10 checks passed"}


def test_orchestrator_rejects_unknown_suites():
    with pytest.raises(ValueError):
        SuiteOrchestrator().run_suite("everything", 4)


@pytest.mark.slow
def test_property_agent_is_reproducible():
    first = PropertyAgent().process({'N': 4, 'seed': 11, 'trials': 1})
    second = PropertyAgent().process({'N': 4, 'seed': 11, 'trials': 1})
    assert first.passed, first.reasoning
    assert first.output['seed'] == 11
    assert _outcomes(first) == _outcomes(second)


def _outcomes(message):
    return [(c['name'], c['passed'], c['detail']) for c in message.output['checks']]
