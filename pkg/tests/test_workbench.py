import pytest

from src.nu_bridge import FourierIndex
from src.symmetry import DecompositionEntry
from src.workbench import Workbench


def test_theta_goes_through_the_cache(bench):
    first = bench.theta("even", 1)
    second = bench.theta("even", 1)
    assert list(first) == ["theta_even_1"]
    assert first["theta_even_1"] == second["theta_even_1"]
    assert first["theta_even_1"].box == 4
    assert bench.cache.stats.hits == 1
    assert bench.cache.stats.misses == 1


def test_theta_kinds(bench):
    assert list(bench.theta("gradient", 2)) == ["grad_2_1", "grad_2_2"]
    assert list(bench.theta("wedge", 1, second=2)) == ["ptilde_12"]
    assert list(bench.theta("chi5", N=4)) == ["chi5"]
    with pytest.raises(ValueError):
        bench.theta("wedge", 1)
    with pytest.raises(ValueError):
        bench.theta("odd", 1)


def test_without_cache(settings):
    bench = Workbench(settings, use_cache=False)
    assert bench.cache is None
    assert bench.theta("even", 3)["theta_even_3"].box == 4
    assert not settings.cache_dir.exists()


def test_describe(bench):
    info = bench.describe("T(l1,l2,1)")
    assert info['expression'] == "T(l1, l2, 1)"
    assert info['order'] == 0
    assert info['multidegree'] == [1, 1, 0, 0, 0, 0]
    assert info['terms'] == 2
    generic = bench.describe("T(q1, q1, 2)")
    assert generic['form_degrees'] == [0, 0, 0, 2, 0, 0]


def test_covariant_needs_bound_forms(bench):
    with pytest.raises(ValueError):
        bench.covariant("T(q1, q1, 2)")


def test_valuate(bench):
    reports, needed = bench.valuate("C1_6")
    assert len(reports) == 10
    assert needed == 1


def test_nu_auto_reduction(bench):
    result = bench.nu("I5*C1_6", indices=[FourierIndex.of(1, 1, 1)], cache_name="i5_sextic")
    assert result.reduced_by == 6
    assert result.needed_chi5_power == 0
    assert result.form.chi5_exponent == 0
    assert len(result.coefficients["(1,1,1)"]) == 7
    data = result.to_dict()
    assert data['expression'] == "I5*C1_6"
    assert len(data['coefficients']["(1,1,1)"]) == 7
    assert ("i5_sextic.c0", 4) in bench.cache.entries()


def test_nu_keeps_the_needed_pole(bench):
    result = bench.nu("C1_6")
    assert result.reduced_by == 0
    assert result.form.chi5_exponent == 1
    with pytest.raises(ValueError):
        bench.nu("C1_6", indices=[FourierIndex.of(1, 1, 1)])


def test_divisor(bench):
    weight = bench.divisor({'d': [1] * 6})
    assert (weight.j, weight.k) == (6, 3)


def test_dims(bench):
    df = bench.dims([(1, 0), (1, 2)], with_basis=False)
    assert df['dim'].tolist() == [5, 9]


def test_decompose(bench):
    assert bench.decompose(1, 0) == [DecompositionEntry((3, 3), 1, 5)]
    assert bench.decompose(expression="p12*p34*p56") == [DecompositionEntry((3, 3), 1, 5)]
    with pytest.raises(ValueError):
        bench.decompose()
    with pytest.raises(ValueError):
        bench.decompose(1, 8)


def test_verify(bench):
    results = bench.verify("divisors")
    assert results['passed']
    assert results['pipeline_metadata']['box'] == 4
    with pytest.raises(ValueError):
        bench.verify("everything")
