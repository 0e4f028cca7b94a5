"""Shared fixtures and configuration for tests."""

import os
from fractions import Fraction
from pathlib import Path

import pytest

# Set test environment
os.environ.setdefault("SIGNRANK_LOG_LEVEL", "WARNING")

from signrank.exactfield import QQ, FieldContext, Polynomial, QuadraticNumber  # noqa: E402
from signrank.incidence import fano, non_fano, pappus, perles_structure, triangle  # noqa: E402


@pytest.fixture
def q5():
    """ℚ(√5), where the nine-point configuration lives."""
    return FieldContext.quadratic(5)


@pytest.fixture
def golden_ratio():
    """φ = (1 + √5)/2."""
    return QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)


@pytest.fixture
def x():
    """The indeterminate of ℚ[x]."""
    return Polynomial.x(QQ)


@pytest.fixture
def golden_polynomial(x):
    """x² − x − 1, whose positive root is φ."""
    return x * x - x - 1


@pytest.fixture
def perles():
    return perles_structure()


@pytest.fixture
def triangle_structure():
    return triangle()


@pytest.fixture
def fano_structure():
    return fano()


@pytest.fixture
def non_fano_structure():
    return non_fano()


@pytest.fixture
def pappus_structure():
    return pappus()


@pytest.fixture(scope="session")
def built_bundle():
    """The counterexample bundle, constructed once per session."""
    from signrank.counterexample import construct_bundle

    return construct_bundle(5)


@pytest.fixture(scope="session")
def bundle_dir(tmp_path_factory, built_bundle) -> Path:
    """A bundle directory written once per session."""
    from signrank.counterexample import verify_bundle, write_bundle

    out = tmp_path_factory.mktemp("bundle")
    write_bundle(built_bundle, out, verify_bundle(built_bundle))
    return out


# Test markers
def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "e2e: End-to-end tests")
    config.addinivalue_line("markers", "slow: Slow running tests")
