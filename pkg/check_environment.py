"""
Environment Check Script
Verifies the interpreter, the exact-arithmetic stack and the workbench settings before a long run.
"""

import importlib
import sys
from pathlib import Path

MINIMUM_PYTHON = (3, 9)

# (distribution, import name, minimum version)
REQUIRED = [
    ("sympy", "sympy", (1, 12)),
    ("numpy", "numpy", (1, 24)),
    ("pandas", "pandas", (2, 0)),
    ("python-dotenv", "dotenv", None),
    ("pytest", "pytest", (7, 4)),
]


def _version_tuple(text):
    parts = []
    for piece in str(text).split(".")[:2]:
        digits = "".join(ch for ch in piece if ch.isdigit())
        parts.append(int(digits) if digits else 0)
    return tuple(parts)


def python_ok():
    found = sys.version_info[:2]
    print(f"Python {sys.version.split()[0]}")
    if found < MINIMUM_PYTHON:
        print(f"❌ Needs Python {MINIMUM_PYTHON[0]}.{MINIMUM_PYTHON[1]} or newer")
        return False
    print("✅ Interpreter is new enough")
    return True


def package_ok(distribution, import_name, minimum):
    """Import a package and compare its version against the manifest floor."""
    try:
        module = importlib.import_module(import_name)
    except ImportError:
        print(f"❌ {distribution} is NOT installed")
        return False
    version = getattr(module, "__version__", None)
    if minimum and version and _version_tuple(version) < minimum:
        wanted = ".".join(map(str, minimum))
        print(f"⚠️  {distribution} {version} is older than {wanted}")
        return False
    print(f"✅ {distribution} {version or ''}".rstrip())
    return True


def exact_arithmetic_ok():
    """Gaussian rationals and domain matrices are what every computation runs on."""
    try:
        from sympy.polys.domains import QQ, QQ_I
        from sympy.polys.matrices import DomainMatrix
    except ImportError as e:
        print(f"❌ sympy lacks exact domains: {e}")
        return False
    i = QQ_I(0, 1)
    if i * i != QQ_I(-1, 0):
        print("❌ QQ_I gives i^2 != -1")
        return False
    M = DomainMatrix([[QQ(1), QQ(2)], [QQ(2), QQ(4)]], (2, 2), QQ)
    if M.rank() != 1:
        print("❌ DomainMatrix rank is wrong")
        return False
    print("✅ QQ_I and DomainMatrix behave")
    return True


def settings_ok():
    """Settings load from the environment and the cache directory is writable."""
    try:
        from src.config import load_settings
        settings = load_settings()
    except ValueError as e:
        print(f"❌ Bad TAUT_* setting: {e}")
        return False
    cache_dir = Path(settings.cache_dir)
    try:
        cache_dir.mkdir(parents=True, exist_ok=True)
        marker = cache_dir / ".write_check"
        marker.write_text("ok", encoding="utf-8")
        marker.unlink()
    except OSError as e:
        print(f"❌ Cache directory {cache_dir} is not writable: {e}")
        return False
    print(f"✅ Settings loaded (cache: {cache_dir}, box: {settings.default_box}, log: {settings.log_level})")
    return True


def main():
    print("=" * 60)
    print("Taut Workbench - Environment Check")
    print("=" * 60)

    sections = [
        ("Interpreter", lambda: [python_ok()]),
        ("Packages", lambda: [package_ok(*entry) for entry in REQUIRED]),
        ("Exact arithmetic", lambda: [exact_arithmetic_ok()]),
        ("Settings", lambda: [settings_ok()]),
    ]
    failures = 0
    for number, (title, run) in enumerate(sections, start=1):
        print(f"\n{number}. {title}")
        outcomes = run()
        failures += outcomes.count(False)
        if title == "Packages" and failures:
            # the later sections import these packages
            break

    print("\n" + "=" * 60)
    if failures:
        print(f"❌ {failures} check(s) failed. Run: pip install -r requirements.txt")
    else:
        print("✅ Ready. Run: python app.py --help")
    print("=" * 60)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
