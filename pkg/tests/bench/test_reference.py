"""Tests for reference module."""
from tauprec.bench.reference import (
    ITERATIONS_1D,
    ITERATIONS_2D,
    PUT_BOUNDARY_BS,
    PUT_BOUNDARY_PIA,
    PUT_TAUS,
    SIZES_2D,
    lookup,
)


def test_lookup():
    assert lookup(ITERATIONS_1D, "P_F", 1.5, 127) == 8.0
    assert lookup(ITERATIONS_1D, "I", 1.8, 511) == 231.2
    assert lookup(ITERATIONS_1D, "P_F", 1.5, 100) is None
    assert lookup(ITERATIONS_1D, "P_F^", 1.5, 127) is None
    assert lookup(ITERATIONS_2D["2"], "I", 1.8, 64, SIZES_2D) is None
    assert lookup(ITERATIONS_2D["3"], "P_F", 1.8, 128, SIZES_2D) == 14.5


def test_put_tables_have_matching_lengths():
    assert len(PUT_TAUS) == len(PUT_BOUNDARY_PIA) == len(PUT_BOUNDARY_BS)
    assert list(PUT_TAUS) == sorted(PUT_TAUS)
