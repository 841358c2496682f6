# conftest.py
# Shared fixtures for the test/ modules.

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from csformula.roots.catalog import load_datum  # noqa: E402


@pytest.fixture(scope="session")
def a1():
    return load_datum("A1-adjoint")


@pytest.fixture(scope="session")
def a1_sc():
    return load_datum("A1-sc")


@pytest.fixture(scope="session")
def a2():
    return load_datum("A2-adjoint")


@pytest.fixture(scope="session")
def gl2():
    return load_datum("A1-gl2")
