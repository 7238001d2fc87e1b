"""Shared strategies and fixtures for the wzpi test suite."""
from __future__ import annotations

import time
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wzpi import (
    BUILTIN_NAMES,
    Poly2,
    UniPoly,
    builtin_record,
    synthesize_certificate,
)

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


WZ_NAMES = tuple(n for n in BUILTIN_NAMES
                 if builtin_record(n).kind == "wz")
THEOREM_NAMES = tuple(f"theorem{i}" for i in range(1, 12))
PRINTED_CERT_NAMES = tuple(n for n in BUILTIN_NAMES
                           if builtin_record(n).has_certificate)


# -- hypothesis strategies ----------------------------------------------------------

rationals = st.fractions(min_value=Fraction(-30), max_value=Fraction(30),
                         max_denominator=10)
nonzero_rationals = rationals.filter(bool)
small_ints = st.integers(min_value=-8, max_value=8)
lattice_points = st.tuples(st.integers(min_value=-5, max_value=5),
                           st.integers(min_value=-5, max_value=5))


def poly2s(max_degree: int = 3, max_terms: int = 6):
    monomials = st.tuples(st.integers(min_value=0, max_value=max_degree),
                          st.integers(min_value=0, max_value=max_degree))
    return st.dictionaries(monomials, rationals, max_size=max_terms).map(Poly2)


nonzero_poly2s = poly2s().filter(lambda p: not p.is_zero)


def unipolys(max_degree: int = 5):
    return st.lists(rationals, max_size=max_degree + 1).map(UniPoly)


nonzero_unipolys = unipolys().filter(lambda p: not p.is_zero)


# -- shared synthesis results -------------------------------------------------------

class SynthesisCache:
    """Runs certificate synthesis once per identity and remembers wall time.

    The first caller pays for the computation; the recorded elapsed time is
    therefore an honest cold-run measurement for the timing assertions.
    """

    def __init__(self):
        self.results = {}
        self.elapsed = {}

    def get(self, name: str):
        if name not in self.results:
            ident = builtin_record(name).to_identity()
            start = time.perf_counter()
            self.results[name] = synthesize_certificate(ident)
            self.elapsed[name] = time.perf_counter() - start
        return self.results[name]


_CACHE = SynthesisCache()


@pytest.fixture(scope="session")
def synthesis() -> SynthesisCache:
    return _CACHE
