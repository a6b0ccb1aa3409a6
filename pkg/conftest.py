"""
Shared fixtures for the test suites
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.simplicial_complex import (
    SimplicialComplex,
    cycle,
    interval,
    random_complex,
    simplex_boundary,
    standard_simplex,
)

# Property suites run 100 examples by default; HOMEOLOGY_HYPOTHESIS_PROFILE=thorough runs 1000
settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HOMEOLOGY_HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config):
    config.addinivalue_line("markers", "property: randomized property suites (run with -m property)")


DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def point() -> SimplicialComplex:
    return standard_simplex(0)


@pytest.fixture
def circle() -> SimplicialComplex:
    return simplex_boundary(2)


@pytest.fixture
def sphere() -> SimplicialComplex:
    """∂Δ³"""
    return simplex_boundary(3)


@pytest.fixture
def triangle() -> SimplicialComplex:
    return standard_simplex(2)


@pytest.fixture
def triangle_wedge() -> SimplicialComplex:
    """Two triangles sharing the vertex c"""
    return SimplicialComplex.from_facets("abcde", [["a", "b", "c"], ["c", "d", "e"]])


@pytest.fixture
def two_points() -> SimplicialComplex:
    """S⁰"""
    return SimplicialComplex.from_facets(["n", "s"], [["n"], ["s"]])


@pytest.fixture
def square() -> SimplicialComplex:
    return cycle(4)


@pytest.fixture
def path() -> SimplicialComplex:
    """I_2"""
    return interval(2)


@pytest.fixture
def edge() -> SimplicialComplex:
    """I_1"""
    return interval(1)


@pytest.fixture
def corpus():
    """Small named and seeded random complexes"""
    named = [
        standard_simplex(0),
        standard_simplex(2),
        simplex_boundary(2),
        simplex_boundary(3),
        interval(2),
        SimplicialComplex.from_facets("abcde", [["a", "b", "c"], ["c", "d", "e"]]),
        SimplicialComplex.from_facets("abcd", [["a", "b", "c"], ["c", "d"]]),
    ]
    seeded = [random_complex(5, 2, density=0.4, seed=seed) for seed in range(3)]
    return named + seeded
