"""
Example usage of the Taut Workbench.
Demonstrates programmatic usage without the command line.
"""

from src.catalog import named_covariant
from src.divisors import divisor_to_form
from src.nu_bridge import FourierIndex
from src.symmetry import format_decomposition
from src.workbench import Workbench

# The Gamma2(W) covariant, written with generic forms and specialized
gamma2_w_text = "50*T(T(f5, f5, 4), l^2, 1) with f5=l1*l2*l3*l4*l5, l=l6"


def main():
    """Example usage of the workbench."""
    print("=" * 60)
    print("Taut Workbench Example")
    print("=" * 60)

    print("\n1. Initializing workbench (no cache)...")
    bench = Workbench(use_cache=False)
    print("   ✓ Workbench initialized")

    print("\n2. Expanding an expression...")
    info = bench.describe(gamma2_w_text)
    print(f"   Canonical form: {info['expression']}")
    print(f"   Multidegree:    {info['multidegree']}")
    print(f"   Order:          {info['order']}")

    print("\n3. Valuations along the ten divisors H_pi...")
    reports, needed = bench.valuate(gamma2_w_text)
    for report in reports[:3]:
        print(f"   {report.partition.label}: {report.values}")
    print(f"   ... needs chi5^{needed} to become holomorphic")

    print("\n4. Image under nu at box 8...")
    result = bench.nu("I5*C1_6", N=8, indices=[FourierIndex.of(1, 1, 1)])
    j, k = result.form.weight
    print(f"   Weight: ({j}, {k})")
    print(f"   Reduced by chi5^{result.reduced_by}")
    for label, vector in result.to_dict()['coefficients'].items():
        print(f"   a({label}) = {vector}")

    print("\n5. S6 decomposition of C'_{1,2}...")
    print(f"   {format_decomposition(bench.decompose(1, 2))}")

    print("\n6. Weight of the form cutting out 2 W_1 + ... + 2 W_6...")
    weight = divisor_to_form([0] * 10, [2] * 6)
    print(f"   (j, k) = ({weight.j}, {weight.k}), admissible: {weight.admissible}")

    print("\n7. Catalog lookup...")
    sextic = named_covariant("C1_6")
    print(f"   C1_6 = {sextic.to_text()}")

    print("\n8. Running the divisor suite...")
    results = bench.verify("divisors", N=4)
    print(f"   Passed: {results['passed']}")
    print(f"   Checks: {results['pipeline_metadata']['check_count']}")

    print("\n" + "=" * 60)
    print("Example completed!")
    print("=" * 60)


if __name__ == "__main__":
    main()
